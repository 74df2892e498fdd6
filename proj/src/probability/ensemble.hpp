#pragma once

#include <optional>
#include <span>

#include "core/raster.hpp"

namespace roadvec {

// Streaming mean of probability fields. The CLI feeds it one on-disk member
// at a time, so a 30-member ensemble never needs more than one member plus
// the running sum in memory.
class EnsembleAccumulator {
 public:
  void add(const ProbabilityField& member);
  int count() const { return count_; }

  // Mean of everything added so far. Per-pixel band sums are renormalized
  // only where they drifted more than 1e-5 from 1, so a single exact member
  // passes through bit-identical.
  ProbabilityField average() const;

 private:
  std::optional<FloatRaster> sum_;
  int count_ = 0;
};

ProbabilityField ensembleAverage(std::span<const ProbabilityField> members);

}  // namespace roadvec
