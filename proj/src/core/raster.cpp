#include "core/raster.hpp"

#include <cmath>
#include <string>

namespace roadvec {

const char* bandSemanticsName(BandSemantics s) {
  switch (s) {
    case BandSemantics::gray: return "gray";
    case BandSemantics::rgb: return "rgb";
    case BandSemantics::binaryMask: return "binary_mask";
    case BandSemantics::classLabel: return "class_label";
    case BandSemantics::probability: return "probability";
  }
  return "unknown";
}

int expectedBandCount(BandSemantics s) {
  switch (s) {
    case BandSemantics::gray: return 1;
    case BandSemantics::rgb: return 3;
    case BandSemantics::binaryMask: return 1;
    case BandSemantics::classLabel: return 1;
    case BandSemantics::probability: return kProbabilityBands;
  }
  return 0;
}

void validateSemantics(const ByteRaster& raster) {
  int expected = expectedBandCount(raster.semantics());
  if (expected > 0 && raster.bandCount() != expected)
    throw DataError(std::string(bandSemanticsName(raster.semantics())) + " raster must have " +
                    std::to_string(expected) + " band(s), got " +
                    std::to_string(raster.bandCount()));
  if (raster.semantics() == BandSemantics::binaryMask) {
    auto px = raster.band(0);
    for (std::size_t i = 0; i < px.size(); ++i)
      if (px[i] > 1)
        throw DataError("binary mask has value " + std::to_string(int(px[i])) + " at pixel " +
                        std::to_string(i));
  } else if (raster.semantics() == BandSemantics::classLabel) {
    auto px = raster.band(0);
    for (std::size_t i = 0; i < px.size(); ++i)
      if (px[i] > 5)
        throw DataError("class label raster has value " + std::to_string(int(px[i])) +
                        " at pixel " + std::to_string(i));
  }
}

ProbabilityField::ProbabilityField(FloatRaster raster) : raster_(std::move(raster)) {
  if (raster_.bandCount() != kProbabilityBands)
    throw DataError("probability field needs " + std::to_string(kProbabilityBands) +
                    " bands, got " + std::to_string(raster_.bandCount()));
  raster_.setSemantics(BandSemantics::probability);
}

ProbabilityField::ProbabilityField(int width, int height, GeoTransform transform)
    : raster_(width, height, kProbabilityBands, BandSemantics::probability, transform) {}

void ProbabilityField::validate(double tol) const {
  std::size_t n = pixelCount();
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (int b = 0; b < kProbabilityBands; ++b) {
      float v = raster_.band(b)[i];
      if (!(v >= 0.0f && v <= 1.0f))
        throw DataError("probability out of [0,1] at pixel " + std::to_string(i) + " band " +
                        std::to_string(b) + ": " + std::to_string(v));
      sum += v;
    }
    if (std::abs(sum - 1.0) > tol)
      throw DataError("probabilities at pixel " + std::to_string(i) + " sum to " +
                      std::to_string(sum));
  }
}

int ProbabilityField::argmaxAt(std::size_t pixel) const {
  int best = 0;
  float bestV = raster_.band(0)[pixel];
  for (int b = 1; b < kProbabilityBands; ++b) {
    float v = raster_.band(b)[pixel];
    if (v > bestV) {
      bestV = v;
      best = b;
    }
  }
  return best;
}

}  // namespace roadvec
