#pragma once

#include <array>
#include <cstddef>

#include "core/raster.hpp"

namespace roadvec {

// Pixel-wise scores of a probability field against a class-label raster.
// Classes are indexed in band order: 0..4 = road classes 1..5, 5 = no-road
// (label value 0).
struct MetricSet {
  std::size_t pixelCount = 0;
  std::array<std::array<std::size_t, kProbabilityBands>, kProbabilityBands> confusion{};
  double accuracy = 0.0;
  double macroPrecision = 0.0;  // means over classes with label support
  double macroRecall = 0.0;
  double macroF1 = 0.0;
  double iou = 0.0;    // binary road vs no-road
  double brier = 0.0;  // mean squared gap to the one-hot truth, summed over bands

  std::size_t support(int bandIndex) const;    // label pixels of that class
  std::size_t predicted(int bandIndex) const;  // argmax pixels of that class
  double precision(int bandIndex) const;       // 0 when nothing was predicted
  double recall(int bandIndex) const;          // 0 when there is no support
  double f1(int bandIndex) const;
};

// Compares per-pixel argmax of the field against labels (0 = no road,
// 1..5 = road class). evalMask, when given, restricts scoring to its 1-pixels.
MetricSet pixelMetrics(const ProbabilityField& field, const ByteRaster& labels,
                       const ByteRaster* evalMask = nullptr);

}  // namespace roadvec
