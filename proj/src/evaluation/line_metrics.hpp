#pragma once

#include <array>
#include <optional>

#include "core/network.hpp"
#include "core/raster.hpp"

namespace roadvec {

struct ClassLineScores {
  double gtLength = 0.0;    // meters of this class in the reference network
  double predLength = 0.0;  // meters of this class in the prediction
  std::optional<double> completeness;  // unset when the class has no reference
  std::optional<double> correctness;   // unset when the class has no prediction
};

struct LineMetricReport {
  double buffer = 0.0;
  std::array<ClassLineScores, kRoadClassCount> perClass;
  // Weighted by per-class reference length (completeness) and per-class
  // predicted length (correctness); undefined classes carry no weight.
  std::optional<double> weightedCompleteness;
  std::optional<double> weightedCorrectness;
};

// Buffer overlap metrics between two classified networks, per road class with
// strict class matching. Completeness of class c = fraction of class-c
// reference length lying within `buffer` of class-c predicted geometry;
// correctness is the mirror image. Lengths are measured by cutting lines into
// pieces no longer than sampleStep and testing each piece midpoint, so the
// result approximates exact clipping to within about sampleStep per crossing.
LineMetricReport lineMetrics(const ClassifiedNetwork& reference,
                             const ClassifiedNetwork& predicted, double buffer = 5.0,
                             double sampleStep = 0.25);

}  // namespace roadvec
