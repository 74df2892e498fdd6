#include "kernels/kernels_detail.hpp"

#if defined(ROADVEC_HAVE_AVX2)

#include <immintrin.h>

#include <algorithm>

// This translation unit is built with -mavx2; callers reach it only after the
// runtime CPU check in dispatch.cpp. Elementwise float ops use separate
// mul/add (no FMA) so results match the scalar reference bit for bit.

namespace roadvec::kernels::avx2 {

void max3U8(const std::uint8_t* a, const std::uint8_t* b, const std::uint8_t* c,
            std::uint8_t* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i vc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c + i));
    __m256i m = _mm256_max_epu8(_mm256_max_epu8(va, vb), vc);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), m);
  }
  for (; i < n; ++i) out[i] = std::max({a[i], b[i], c[i]});
}

void min3U8(const std::uint8_t* a, const std::uint8_t* b, const std::uint8_t* c,
            std::uint8_t* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i vc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c + i));
    __m256i m = _mm256_min_epu8(_mm256_min_epu8(va, vb), vc);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), m);
  }
  for (; i < n; ++i) out[i] = std::min({a[i], b[i], c[i]});
}

void rowMax3U8(const std::uint8_t* a, std::uint8_t* out, std::size_t n, std::uint8_t border) {
  if (n == 0) return;
  out[0] = std::max({border, a[0], n > 1 ? a[1] : border});
  std::size_t i = 1;
  for (; i + 32 + 1 <= n; i += 32) {
    __m256i left = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i - 1));
    __m256i mid = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i right = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i + 1));
    __m256i m = _mm256_max_epu8(_mm256_max_epu8(left, mid), right);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), m);
  }
  for (; i < n; ++i) {
    std::uint8_t right = i + 1 < n ? a[i + 1] : border;
    out[i] = std::max({a[i - 1], a[i], right});
  }
}

void rowMin3U8(const std::uint8_t* a, std::uint8_t* out, std::size_t n, std::uint8_t border) {
  if (n == 0) return;
  out[0] = std::min({border, a[0], n > 1 ? a[1] : border});
  std::size_t i = 1;
  for (; i + 32 + 1 <= n; i += 32) {
    __m256i left = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i - 1));
    __m256i mid = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i right = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i + 1));
    __m256i m = _mm256_min_epu8(_mm256_min_epu8(left, mid), right);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), m);
  }
  for (; i < n; ++i) {
    std::uint8_t right = i + 1 < n ? a[i + 1] : border;
    out[i] = std::min({a[i - 1], a[i], right});
  }
}

void max3F32(const float* a, const float* b, const float* c, float* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 va = _mm256_loadu_ps(a + i);
    __m256 vb = _mm256_loadu_ps(b + i);
    __m256 vc = _mm256_loadu_ps(c + i);
    _mm256_storeu_ps(out + i, _mm256_max_ps(_mm256_max_ps(va, vb), vc));
  }
  for (; i < n; ++i) out[i] = std::max({a[i], b[i], c[i]});
}

void rowMax3F32(const float* a, float* out, std::size_t n, float border) {
  if (n == 0) return;
  out[0] = std::max({border, a[0], n > 1 ? a[1] : border});
  std::size_t i = 1;
  for (; i + 8 + 1 <= n; i += 8) {
    __m256 left = _mm256_loadu_ps(a + i - 1);
    __m256 mid = _mm256_loadu_ps(a + i);
    __m256 right = _mm256_loadu_ps(a + i + 1);
    _mm256_storeu_ps(out + i, _mm256_max_ps(_mm256_max_ps(left, mid), right));
  }
  for (; i < n; ++i) {
    float right = i + 1 < n ? a[i + 1] : border;
    out[i] = std::max({a[i - 1], a[i], right});
  }
}

void addF32(float* acc, const float* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 v = _mm256_add_ps(_mm256_loadu_ps(acc + i), _mm256_loadu_ps(src + i));
    _mm256_storeu_ps(acc + i, v);
  }
  for (; i < n; ++i) acc[i] += src[i];
}

void scaleF32(float* a, float s, std::size_t n) {
  __m256 vs = _mm256_set1_ps(s);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8)
    _mm256_storeu_ps(a + i, _mm256_mul_ps(_mm256_loadu_ps(a + i), vs));
  for (; i < n; ++i) a[i] *= s;
}

void axpyF32(float* acc, const float* src, float coeff, std::size_t n) {
  __m256 vc = _mm256_set1_ps(coeff);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 prod = _mm256_mul_ps(vc, _mm256_loadu_ps(src + i));
    _mm256_storeu_ps(acc + i, _mm256_add_ps(_mm256_loadu_ps(acc + i), prod));
  }
  for (; i < n; ++i) acc[i] += coeff * src[i];
}

namespace {

double hsum4(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

}  // namespace

double sumF32(const float* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_add_pd(acc, _mm256_cvtps_pd(_mm_loadu_ps(a + i)));
  double s = hsum4(acc);
  for (; i < n; ++i) s += a[i];
  return s;
}

double dotF32(const float* a, const float* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d va = _mm256_cvtps_pd(_mm_loadu_ps(a + i));
    __m256d vb = _mm256_cvtps_pd(_mm_loadu_ps(b + i));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(va, vb));
  }
  double s = hsum4(acc);
  for (; i < n; ++i) s += double(a[i]) * double(b[i]);
  return s;
}

double sumSqDiffF32(const float* a, float mean, std::size_t n) {
  __m256d vm = _mm256_set1_pd(double(mean));
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_cvtps_pd(_mm_loadu_ps(a + i)), vm);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
  }
  double s = hsum4(acc);
  for (; i < n; ++i) {
    double d = double(a[i]) - double(mean);
    s += d * d;
  }
  return s;
}

void argmax6F32(const float* const bands[6], std::uint8_t* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 bestV = _mm256_loadu_ps(bands[0] + i);
    __m256i bestI = _mm256_setzero_si256();
    for (int b = 1; b < 6; ++b) {
      __m256 v = _mm256_loadu_ps(bands[b] + i);
      __m256 gt = _mm256_cmp_ps(v, bestV, _CMP_GT_OQ);
      bestV = _mm256_blendv_ps(bestV, v, gt);
      bestI = _mm256_blendv_epi8(bestI, _mm256_set1_epi32(b), _mm256_castps_si256(gt));
    }
    alignas(32) std::int32_t idx[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(idx), bestI);
    for (int k = 0; k < 8; ++k) out[i + k] = static_cast<std::uint8_t>(idx[k]);
  }
  for (; i < n; ++i) {
    int best = 0;
    float bestV = bands[0][i];
    for (int b = 1; b < 6; ++b) {
      if (bands[b][i] > bestV) {
        bestV = bands[b][i];
        best = b;
      }
    }
    out[i] = static_cast<std::uint8_t>(best);
  }
}

}  // namespace roadvec::kernels::avx2

#endif  // ROADVEC_HAVE_AVX2
