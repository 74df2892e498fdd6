#include "kernels/kernels_detail.hpp"

#if defined(ROADVEC_HAVE_NEON)

#include <arm_neon.h>

#include <algorithm>

// aarch64 counterpart of kernels_avx2.cpp; same bit-exactness contract for
// the elementwise float kernels (separate mul/add, no fused ops).

namespace roadvec::kernels::neon {

void max3U8(const std::uint8_t* a, const std::uint8_t* b, const std::uint8_t* c,
            std::uint8_t* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16)
    vst1q_u8(out + i, vmaxq_u8(vmaxq_u8(vld1q_u8(a + i), vld1q_u8(b + i)), vld1q_u8(c + i)));
  for (; i < n; ++i) out[i] = std::max({a[i], b[i], c[i]});
}

void min3U8(const std::uint8_t* a, const std::uint8_t* b, const std::uint8_t* c,
            std::uint8_t* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16)
    vst1q_u8(out + i, vminq_u8(vminq_u8(vld1q_u8(a + i), vld1q_u8(b + i)), vld1q_u8(c + i)));
  for (; i < n; ++i) out[i] = std::min({a[i], b[i], c[i]});
}

void rowMax3U8(const std::uint8_t* a, std::uint8_t* out, std::size_t n, std::uint8_t border) {
  if (n == 0) return;
  out[0] = std::max({border, a[0], n > 1 ? a[1] : border});
  std::size_t i = 1;
  for (; i + 16 + 1 <= n; i += 16)
    vst1q_u8(out + i,
             vmaxq_u8(vmaxq_u8(vld1q_u8(a + i - 1), vld1q_u8(a + i)), vld1q_u8(a + i + 1)));
  for (; i < n; ++i) {
    std::uint8_t right = i + 1 < n ? a[i + 1] : border;
    out[i] = std::max({a[i - 1], a[i], right});
  }
}

void rowMin3U8(const std::uint8_t* a, std::uint8_t* out, std::size_t n, std::uint8_t border) {
  if (n == 0) return;
  out[0] = std::min({border, a[0], n > 1 ? a[1] : border});
  std::size_t i = 1;
  for (; i + 16 + 1 <= n; i += 16)
    vst1q_u8(out + i,
             vminq_u8(vminq_u8(vld1q_u8(a + i - 1), vld1q_u8(a + i)), vld1q_u8(a + i + 1)));
  for (; i < n; ++i) {
    std::uint8_t right = i + 1 < n ? a[i + 1] : border;
    out[i] = std::min({a[i - 1], a[i], right});
  }
}

void max3F32(const float* a, const float* b, const float* c, float* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    vst1q_f32(out + i,
              vmaxq_f32(vmaxq_f32(vld1q_f32(a + i), vld1q_f32(b + i)), vld1q_f32(c + i)));
  for (; i < n; ++i) out[i] = std::max({a[i], b[i], c[i]});
}

void rowMax3F32(const float* a, float* out, std::size_t n, float border) {
  if (n == 0) return;
  out[0] = std::max({border, a[0], n > 1 ? a[1] : border});
  std::size_t i = 1;
  for (; i + 4 + 1 <= n; i += 4)
    vst1q_f32(out + i,
              vmaxq_f32(vmaxq_f32(vld1q_f32(a + i - 1), vld1q_f32(a + i)), vld1q_f32(a + i + 1)));
  for (; i < n; ++i) {
    float right = i + 1 < n ? a[i + 1] : border;
    out[i] = std::max({a[i - 1], a[i], right});
  }
}

void addF32(float* acc, const float* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    vst1q_f32(acc + i, vaddq_f32(vld1q_f32(acc + i), vld1q_f32(src + i)));
  for (; i < n; ++i) acc[i] += src[i];
}

void scaleF32(float* a, float s, std::size_t n) {
  float32x4_t vs = vdupq_n_f32(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) vst1q_f32(a + i, vmulq_f32(vld1q_f32(a + i), vs));
  for (; i < n; ++i) a[i] *= s;
}

void axpyF32(float* acc, const float* src, float coeff, std::size_t n) {
  float32x4_t vc = vdupq_n_f32(coeff);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    float32x4_t prod = vmulq_f32(vc, vld1q_f32(src + i));
    vst1q_f32(acc + i, vaddq_f32(vld1q_f32(acc + i), prod));
  }
  for (; i < n; ++i) acc[i] += coeff * src[i];
}

namespace {

double hsum2(float64x2_t v) { return vgetq_lane_f64(v, 0) + vgetq_lane_f64(v, 1); }

}  // namespace

double sumF32(const float* a, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    acc = vaddq_f64(acc, vcvt_f64_f32(vld1_f32(a + i)));
  double s = hsum2(acc);
  for (; i < n; ++i) s += a[i];
  return s;
}

double dotF32(const float* a, const float* b, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t va = vcvt_f64_f32(vld1_f32(a + i));
    float64x2_t vb = vcvt_f64_f32(vld1_f32(b + i));
    acc = vaddq_f64(acc, vmulq_f64(va, vb));
  }
  double s = hsum2(acc);
  for (; i < n; ++i) s += double(a[i]) * double(b[i]);
  return s;
}

double sumSqDiffF32(const float* a, float mean, std::size_t n) {
  float64x2_t vm = vdupq_n_f64(double(mean));
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t d = vsubq_f64(vcvt_f64_f32(vld1_f32(a + i)), vm);
    acc = vaddq_f64(acc, vmulq_f64(d, d));
  }
  double s = hsum2(acc);
  for (; i < n; ++i) {
    double d = double(a[i]) - double(mean);
    s += d * d;
  }
  return s;
}

void argmax6F32(const float* const bands[6], std::uint8_t* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    float32x4_t bestV = vld1q_f32(bands[0] + i);
    uint32x4_t bestI = vdupq_n_u32(0);
    for (int b = 1; b < 6; ++b) {
      float32x4_t v = vld1q_f32(bands[b] + i);
      uint32x4_t gt = vcgtq_f32(v, bestV);
      bestV = vbslq_f32(gt, v, bestV);
      bestI = vbslq_u32(gt, vdupq_n_u32(std::uint32_t(b)), bestI);
    }
    std::uint32_t idx[4];
    vst1q_u32(idx, bestI);
    for (int k = 0; k < 4; ++k) out[i + k] = static_cast<std::uint8_t>(idx[k]);
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

}  // namespace roadvec::kernels::neon

#endif  // ROADVEC_HAVE_NEON
