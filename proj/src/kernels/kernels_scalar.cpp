#include <algorithm>

#include "kernels/kernels_detail.hpp"

namespace roadvec::kernels::scalar {

void max3U8(const std::uint8_t* a, const std::uint8_t* b, const std::uint8_t* c,
            std::uint8_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::max({a[i], b[i], c[i]});
}

void min3U8(const std::uint8_t* a, const std::uint8_t* b, const std::uint8_t* c,
            std::uint8_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::min({a[i], b[i], c[i]});
}

void rowMax3U8(const std::uint8_t* a, std::uint8_t* out, std::size_t n, std::uint8_t border) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t left = i > 0 ? a[i - 1] : border;
    std::uint8_t right = i + 1 < n ? a[i + 1] : border;
    out[i] = std::max({left, a[i], right});
  }
}

void rowMin3U8(const std::uint8_t* a, std::uint8_t* out, std::size_t n, std::uint8_t border) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t left = i > 0 ? a[i - 1] : border;
    std::uint8_t right = i + 1 < n ? a[i + 1] : border;
    out[i] = std::min({left, a[i], right});
  }
}

void max3F32(const float* a, const float* b, const float* c, float* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::max({a[i], b[i], c[i]});
}

void rowMax3F32(const float* a, float* out, std::size_t n, float border) {
  for (std::size_t i = 0; i < n; ++i) {
    float left = i > 0 ? a[i - 1] : border;
    float right = i + 1 < n ? a[i + 1] : border;
    out[i] = std::max({left, a[i], right});
  }
}

void addF32(float* acc, const float* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += src[i];
}

void scaleF32(float* a, float s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) a[i] *= s;
}

void axpyF32(float* acc, const float* src, float coeff, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += coeff * src[i];
}

double sumF32(const float* a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i];
  return s;
}

double dotF32(const float* a, const float* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += double(a[i]) * double(b[i]);
  return s;
}

double sumSqDiffF32(const float* a, float mean, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double d = double(a[i]) - double(mean);
    s += d * d;
  }
  return s;
}

void argmax6F32(const float* const bands[6], std::uint8_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
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

}  // namespace roadvec::kernels::scalar
