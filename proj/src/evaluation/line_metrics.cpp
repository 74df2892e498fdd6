#include "evaluation/line_metrics.hpp"

#include <cmath>
#include <vector>

namespace roadvec {

namespace {

// Class-c geometry of one network, with padded boxes for cheap rejection.
struct ClassGeometry {
  std::vector<const Polyline*> lines;
  std::vector<BoundingBox> boxes;  // padded by the buffer
  double totalLength = 0.0;

  bool anywhereNear(const Point2& p, double buffer) const {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const BoundingBox& bb = boxes[i];
      if (p.x < bb.minX || p.x > bb.maxX || p.y < bb.minY || p.y > bb.maxY) continue;
      if (pointToPolylineDistance(p, *lines[i]) <= buffer) return true;
    }
    return false;
  }
};

std::array<ClassGeometry, kRoadClassCount> collect(const ClassifiedNetwork& network,
                                                   double buffer) {
  std::array<ClassGeometry, kRoadClassCount> byClass;
  for (const auto& [id, section] : network.sections()) {
    ClassGeometry& g = byClass[static_cast<std::size_t>(section.roadClass.index())];
    g.lines.push_back(&section.line);
    g.boxes.push_back(boundingBox(section.line, buffer));
    g.totalLength += polylineLength(section.line);
  }
  return byClass;
}

// Length of `subject` lying within buffer of `target`, by midpoint sampling
// of pieces no longer than step.
double coveredLength(const ClassGeometry& subject, const ClassGeometry& target, double buffer,
                     double step) {
  double covered = 0.0;
  for (const Polyline* linePtr : subject.lines) {
    const Polyline& line = *linePtr;
    for (std::size_t i = 1; i < line.size(); ++i) {
      const Point2& a = line[i - 1];
      const Point2& b = line[i];
      double len = distance(a, b);
      int pieces = std::max(1, static_cast<int>(std::ceil(len / step)));
      double pieceLen = len / pieces;
      for (int k = 0; k < pieces; ++k) {
        double tMid = (k + 0.5) / pieces;
        Point2 mid{a.x + (b.x - a.x) * tMid, a.y + (b.y - a.y) * tMid};
        if (target.anywhereNear(mid, buffer)) covered += pieceLen;
      }
    }
  }
  return covered;
}

}  // namespace

LineMetricReport lineMetrics(const ClassifiedNetwork& reference,
                             const ClassifiedNetwork& predicted, double buffer,
                             double sampleStep) {
  if (buffer <= 0.0) throw ConfigError("lineMetrics: buffer must be positive");
  if (sampleStep <= 0.0) throw ConfigError("lineMetrics: sample step must be positive");

  auto gt = collect(reference, buffer);
  auto pred = collect(predicted, buffer);

  LineMetricReport report;
  report.buffer = buffer;
  double comSum = 0.0, comWeight = 0.0, corSum = 0.0, corWeight = 0.0;
  for (int c = 0; c < kRoadClassCount; ++c) {
    ClassLineScores& scores = report.perClass[static_cast<std::size_t>(c)];
    scores.gtLength = gt[c].totalLength;
    scores.predLength = pred[c].totalLength;
    if (scores.gtLength > 0.0) {
      scores.completeness =
          coveredLength(gt[c], pred[c], buffer, sampleStep) / scores.gtLength;
      comSum += *scores.completeness * scores.gtLength;
      comWeight += scores.gtLength;
    }
    if (scores.predLength > 0.0) {
      scores.correctness =
          coveredLength(pred[c], gt[c], buffer, sampleStep) / scores.predLength;
      corSum += *scores.correctness * scores.predLength;
      corWeight += scores.predLength;
    }
  }
  if (comWeight > 0.0) report.weightedCompleteness = comSum / comWeight;
  if (corWeight > 0.0) report.weightedCorrectness = corSum / corWeight;
  return report;
}

}  // namespace roadvec
