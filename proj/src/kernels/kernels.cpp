#include "kernels/kernels.hpp"

#include "kernels/kernels_detail.hpp"

namespace roadvec::kernels {

// Dispatch wrappers. The neon branch collapses to scalar on x86 builds (and
// avx2 on arm builds); dispatch.cpp never selects a backend the build lacks.

#if defined(ROADVEC_HAVE_AVX2)
#define ROADVEC_CASE_AVX2(call) \
  case Backend::avx2: return avx2::call;
#else
#define ROADVEC_CASE_AVX2(call)
#endif
#if defined(ROADVEC_HAVE_NEON)
#define ROADVEC_CASE_NEON(call) \
  case Backend::neon: return neon::call;
#else
#define ROADVEC_CASE_NEON(call)
#endif

#define ROADVEC_DISPATCH(call)  \
  switch (activeBackend()) {    \
    ROADVEC_CASE_AVX2(call)     \
    ROADVEC_CASE_NEON(call)     \
    default: return scalar::call; \
  }

void max3U8(const std::uint8_t* a, const std::uint8_t* b, const std::uint8_t* c,
            std::uint8_t* out, std::size_t n) {
  ROADVEC_DISPATCH(max3U8(a, b, c, out, n))
}

void min3U8(const std::uint8_t* a, const std::uint8_t* b, const std::uint8_t* c,
            std::uint8_t* out, std::size_t n) {
  ROADVEC_DISPATCH(min3U8(a, b, c, out, n))
}

void rowMax3U8(const std::uint8_t* a, std::uint8_t* out, std::size_t n, std::uint8_t border) {
  ROADVEC_DISPATCH(rowMax3U8(a, out, n, border))
}

void rowMin3U8(const std::uint8_t* a, std::uint8_t* out, std::size_t n, std::uint8_t border) {
  ROADVEC_DISPATCH(rowMin3U8(a, out, n, border))
}

void max3F32(const float* a, const float* b, const float* c, float* out, std::size_t n) {
  ROADVEC_DISPATCH(max3F32(a, b, c, out, n))
}

void rowMax3F32(const float* a, float* out, std::size_t n, float border) {
  ROADVEC_DISPATCH(rowMax3F32(a, out, n, border))
}

void addF32(float* acc, const float* src, std::size_t n) {
  ROADVEC_DISPATCH(addF32(acc, src, n))
}

void scaleF32(float* a, float s, std::size_t n) { ROADVEC_DISPATCH(scaleF32(a, s, n)) }

void axpyF32(float* acc, const float* src, float coeff, std::size_t n) {
  ROADVEC_DISPATCH(axpyF32(acc, src, coeff, n))
}

double sumF32(const float* a, std::size_t n) { ROADVEC_DISPATCH(sumF32(a, n)) }

double dotF32(const float* a, const float* b, std::size_t n) {
  ROADVEC_DISPATCH(dotF32(a, b, n))
}

double sumSqDiffF32(const float* a, float mean, std::size_t n) {
  ROADVEC_DISPATCH(sumSqDiffF32(a, mean, n))
}

void argmax6F32(const float* const bands[6], std::uint8_t* out, std::size_t n) {
  ROADVEC_DISPATCH(argmax6F32(bands, out, n))
}

#undef ROADVEC_DISPATCH
#undef ROADVEC_CASE_AVX2
#undef ROADVEC_CASE_NEON

}  // namespace roadvec::kernels
