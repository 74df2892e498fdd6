#pragma once

#include <cstddef>
#include <cstdint>

#include "kernels/dispatch.hpp"

namespace roadvec::kernels {

// Data-parallel inner loops of the pipeline. Every function dispatches to the
// active backend; scalar is the reference implementation the SIMD variants
// are equivalence-tested against. Elementwise float kernels are bit-exact
// across backends (builds disable FP contraction); the reductions reassociate
// and agree only to rounding.

// Elementwise maximum / minimum of three rows, used as the vertical pass of
// separable 3x3 dilation and erosion.
void max3U8(const std::uint8_t* a, const std::uint8_t* b, const std::uint8_t* c,
            std::uint8_t* out, std::size_t n);
void min3U8(const std::uint8_t* a, const std::uint8_t* b, const std::uint8_t* c,
            std::uint8_t* out, std::size_t n);

// Horizontal 3-wide window maximum / minimum with an explicit out-of-row
// value. out must not alias a.
void rowMax3U8(const std::uint8_t* a, std::uint8_t* out, std::size_t n, std::uint8_t border);
void rowMin3U8(const std::uint8_t* a, std::uint8_t* out, std::size_t n, std::uint8_t border);

// Float analogues for score-map dilation.
void max3F32(const float* a, const float* b, const float* c, float* out, std::size_t n);
void rowMax3F32(const float* a, float* out, std::size_t n, float border);

void addF32(float* acc, const float* src, std::size_t n);            // acc += src
void scaleF32(float* a, float s, std::size_t n);                     // a *= s
void axpyF32(float* acc, const float* src, float coeff, std::size_t n);  // acc += coeff*src

double sumF32(const float* a, std::size_t n);
double dotF32(const float* a, const float* b, std::size_t n);
// Σ (a[i] − mean)², the variance numerator of a normalized correlation window.
double sumSqDiffF32(const float* a, float mean, std::size_t n);

// Per-pixel index of the largest of six bands, ties to the lowest index.
void argmax6F32(const float* const bands[6], std::uint8_t* out, std::size_t n);

}  // namespace roadvec::kernels
