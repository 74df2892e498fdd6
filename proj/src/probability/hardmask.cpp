#include "probability/hardmask.hpp"

#include <cmath>

#include "morphology/morphology.hpp"

namespace roadvec {

ProbabilityField applyHardMask(const ProbabilityField& field, const ByteRaster& roadRegion) {
  requireBinaryMask(roadRegion, "applyHardMask");
  if (!sameGrid(field.raster(), roadRegion))
    throw DataError("applyHardMask: field and road region grids differ");

  ProbabilityField out = field;
  float* bands[kProbabilityBands];
  for (int b = 0; b < kProbabilityBands; ++b) bands[b] = out.band(b).data();
  auto region = roadRegion.band(0);

  for (std::size_t i = 0; i < out.pixelCount(); ++i) {
    if (region[i] == 0) {
      for (int b = 0; b < kRoadClassCount; ++b) bands[b][i] = 0.0f;
      bands[kRoadClassCount][i] = 1.0f;
      continue;
    }
    bands[kRoadClassCount][i] = 0.0f;
    double sum = 0.0;
    for (int b = 0; b < kRoadClassCount; ++b) sum += bands[b][i];
    if (sum <= 0.0) {
      for (int b = 0; b < kRoadClassCount; ++b)
        bands[b][i] = 1.0f / static_cast<float>(kRoadClassCount);
    } else if (std::abs(sum - 1.0) > 1e-6) {
      // Skipping the rescale when the sum is already exact keeps the
      // operation bit-identical on its own output.
      float inv = static_cast<float>(1.0 / sum);
      for (int b = 0; b < kRoadClassCount; ++b) bands[b][i] *= inv;
    }
  }
  return out;
}

ProbabilityField oneHotFromLabels(const ByteRaster& labels) {
  if (labels.bandCount() != 1) throw DataError("oneHotFromLabels: labels must be single-band");
  ProbabilityField out(labels.width(), labels.height(), labels.transform());
  auto src = labels.band(0);
  for (std::size_t i = 0; i < labels.pixelCount(); ++i) {
    int label = src[i];
    if (label > kRoadClassCount) throw DataError("oneHotFromLabels: label above 5");
    int band = label == 0 ? kRoadClassCount : label - 1;
    out.band(band)[i] = 1.0f;
  }
  return out;
}

}  // namespace roadvec
