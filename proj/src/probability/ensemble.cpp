#include "probability/ensemble.hpp"

#include <cmath>

#include "kernels/kernels.hpp"

namespace roadvec {

void EnsembleAccumulator::add(const ProbabilityField& member) {
  if (!sum_) {
    sum_ = member.raster();
    count_ = 1;
    return;
  }
  if (!sum_->sameGrid(member.raster()))
    throw DataError("ensemble members must share dimensions and transform");
  for (int b = 0; b < kProbabilityBands; ++b)
    kernels::addF32(sum_->band(b).data(), member.band(b).data(), sum_->pixelCount());
  ++count_;
}

ProbabilityField EnsembleAccumulator::average() const {
  if (count_ == 0) throw ConfigError("ensemble needs at least one member");
  FloatRaster mean = *sum_;
  if (count_ > 1) {
    float inv = 1.0f / static_cast<float>(count_);
    for (int b = 0; b < kProbabilityBands; ++b)
      kernels::scaleF32(mean.band(b).data(), inv, mean.pixelCount());
  }
  float* bands[kProbabilityBands];
  for (int b = 0; b < kProbabilityBands; ++b) bands[b] = mean.band(b).data();
  for (std::size_t i = 0; i < mean.pixelCount(); ++i) {
    double sum = 0.0;
    for (int b = 0; b < kProbabilityBands; ++b) sum += bands[b][i];
    if (std::abs(sum - 1.0) > 1e-5 && sum > 0.0) {
      float inv = static_cast<float>(1.0 / sum);
      for (int b = 0; b < kProbabilityBands; ++b) bands[b][i] *= inv;
    }
  }
  return ProbabilityField(std::move(mean));
}

ProbabilityField ensembleAverage(std::span<const ProbabilityField> members) {
  EnsembleAccumulator acc;
  for (const ProbabilityField& m : members) acc.add(m);
  return acc.average();
}

}  // namespace roadvec
