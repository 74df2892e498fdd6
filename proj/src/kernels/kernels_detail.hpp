#pragma once

#include <cstddef>
#include <cstdint>

// Per-backend implementations behind the dispatching wrappers in kernels.cpp.
// Signatures mirror kernels.hpp exactly.

#define ROADVEC_KERNEL_DECLS                                                                     \
  void max3U8(const std::uint8_t* a, const std::uint8_t* b, const std::uint8_t* c,               \
              std::uint8_t* out, std::size_t n);                                                 \
  void min3U8(const std::uint8_t* a, const std::uint8_t* b, const std::uint8_t* c,               \
              std::uint8_t* out, std::size_t n);                                                 \
  void rowMax3U8(const std::uint8_t* a, std::uint8_t* out, std::size_t n, std::uint8_t border);  \
  void rowMin3U8(const std::uint8_t* a, std::uint8_t* out, std::size_t n, std::uint8_t border);  \
  void max3F32(const float* a, const float* b, const float* c, float* out, std::size_t n);       \
  void rowMax3F32(const float* a, float* out, std::size_t n, float border);                      \
  void addF32(float* acc, const float* src, std::size_t n);                                      \
  void scaleF32(float* a, float s, std::size_t n);                                               \
  void axpyF32(float* acc, const float* src, float coeff, std::size_t n);                        \
  double sumF32(const float* a, std::size_t n);                                                  \
  double dotF32(const float* a, const float* b, std::size_t n);                                  \
  double sumSqDiffF32(const float* a, float mean, std::size_t n);                                \
  void argmax6F32(const float* const bands[6], std::uint8_t* out, std::size_t n);

namespace roadvec::kernels::scalar {
ROADVEC_KERNEL_DECLS
}

#if defined(ROADVEC_HAVE_AVX2)
namespace roadvec::kernels::avx2 {
ROADVEC_KERNEL_DECLS
}
#endif

#if defined(ROADVEC_HAVE_NEON)
namespace roadvec::kernels::neon {
ROADVEC_KERNEL_DECLS
}
#endif
