#include "evaluation/pixel_metrics.hpp"

#include <vector>

#include "kernels/kernels.hpp"
#include "morphology/morphology.hpp"

namespace roadvec {

std::size_t MetricSet::support(int bandIndex) const {
  std::size_t n = 0;
  for (int p = 0; p < kProbabilityBands; ++p)
    n += confusion[static_cast<std::size_t>(bandIndex)][static_cast<std::size_t>(p)];
  return n;
}

std::size_t MetricSet::predicted(int bandIndex) const {
  std::size_t n = 0;
  for (int t = 0; t < kProbabilityBands; ++t)
    n += confusion[static_cast<std::size_t>(t)][static_cast<std::size_t>(bandIndex)];
  return n;
}

double MetricSet::precision(int bandIndex) const {
  std::size_t denom = predicted(bandIndex);
  if (denom == 0) return 0.0;
  auto b = static_cast<std::size_t>(bandIndex);
  return static_cast<double>(confusion[b][b]) / static_cast<double>(denom);
}

double MetricSet::recall(int bandIndex) const {
  std::size_t denom = support(bandIndex);
  if (denom == 0) return 0.0;
  auto b = static_cast<std::size_t>(bandIndex);
  return static_cast<double>(confusion[b][b]) / static_cast<double>(denom);
}

double MetricSet::f1(int bandIndex) const {
  double p = precision(bandIndex), r = recall(bandIndex);
  if (p + r == 0.0) return 0.0;
  return 2.0 * p * r / (p + r);
}

MetricSet pixelMetrics(const ProbabilityField& field, const ByteRaster& labels,
                       const ByteRaster* evalMask) {
  if (labels.bandCount() != 1) throw DataError("pixelMetrics: labels must be single-band");
  if (!sameGrid(field.raster(), labels))
    throw DataError("pixelMetrics: field and label grids differ");
  if (evalMask) {
    requireBinaryMask(*evalMask, "pixelMetrics evalMask");
    if (!sameGrid(*evalMask, labels)) throw DataError("pixelMetrics: eval mask grid differs");
  }

  const std::size_t n = labels.pixelCount();
  std::vector<std::uint8_t> argmax(n);
  const float* bands[kProbabilityBands];
  for (int b = 0; b < kProbabilityBands; ++b) bands[b] = field.band(b).data();
  kernels::argmax6F32(bands, argmax.data(), n);

  MetricSet m;
  auto lab = labels.band(0);
  const std::uint8_t* mask = evalMask ? evalMask->band(0).data() : nullptr;
  std::size_t roadBoth = 0, roadEither = 0;
  double brierSum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask && mask[i] == 0) continue;
    int label = lab[i];
    if (label > kRoadClassCount) throw DataError("pixelMetrics: label value above 5");
    int trueBand = label == 0 ? kRoadClassCount : label - 1;
    int predBand = argmax[i];
    ++m.confusion[static_cast<std::size_t>(trueBand)][static_cast<std::size_t>(predBand)];

    bool roadTrue = trueBand != kRoadClassCount;
    bool roadPred = predBand != kRoadClassCount;
    roadBoth += roadTrue && roadPred;
    roadEither += roadTrue || roadPred;

    for (int b = 0; b < kProbabilityBands; ++b) {
      double y = b == trueBand ? 1.0 : 0.0;
      double d = bands[b][i] - y;
      brierSum += d * d;
    }
    ++m.pixelCount;
  }
  if (m.pixelCount == 0) throw DataError("pixelMetrics: evaluation mask selects no pixels");

  std::size_t correct = 0;
  for (int b = 0; b < kProbabilityBands; ++b)
    correct += m.confusion[static_cast<std::size_t>(b)][static_cast<std::size_t>(b)];
  m.accuracy = static_cast<double>(correct) / static_cast<double>(m.pixelCount);

  int present = 0;
  double pSum = 0.0, rSum = 0.0, fSum = 0.0;
  for (int b = 0; b < kProbabilityBands; ++b) {
    if (m.support(b) == 0) continue;
    ++present;
    pSum += m.precision(b);
    rSum += m.recall(b);
    fSum += m.f1(b);
  }
  if (present > 0) {
    m.macroPrecision = pSum / present;
    m.macroRecall = rSum / present;
    m.macroF1 = fSum / present;
  }
  m.iou = roadEither == 0 ? 1.0 : static_cast<double>(roadBoth) / static_cast<double>(roadEither);
  m.brier = brierSum / static_cast<double>(m.pixelCount);
  return m;
}

}  // namespace roadvec
