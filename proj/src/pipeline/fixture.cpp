#include "pipeline/fixture.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "core/geometry.hpp"
#include "core/rng.hpp"

namespace roadvec {

RoadNetwork randomNetwork(const SyntheticParams& params, std::uint64_t seed) {
  Rng rng(subSeed(seed, "fixture/network"));
  double worldW = params.width * params.pixelSize;
  double worldH = params.height * params.pixelSize;
  double loX = params.originX + params.margin, hiX = params.originX + worldW - params.margin;
  double loY = params.originY - worldH + params.margin, hiY = params.originY - params.margin;
  if (loX >= hiX || loY >= hiY) throw DataError("randomNetwork: margin leaves no room");

  RoadNetwork network;
  std::vector<Polyline> placed;
  char id[16];
  for (int i = 0; i < params.segmentCount; ++i) {
    bool ok = false;
    for (int attempt = 0; attempt < 2000 && !ok; ++attempt) {
      double length = rng.uniformRange(params.minLength, params.maxLength);
      // Quadrant angle away from both axes; a random quadrant restores the
      // full circle.
      double angle = rng.uniformRange(params.axisAvoidDeg, 90.0 - params.axisAvoidDeg) *
                     std::numbers::pi / 180.0;
      int quadrant = static_cast<int>(rng.uniformInt(4));
      double ux = std::cos(angle) * (quadrant % 2 == 0 ? 1.0 : -1.0);
      double uy = std::sin(angle) * (quadrant / 2 == 0 ? 1.0 : -1.0);
      Point2 a{rng.uniformRange(loX, hiX), rng.uniformRange(loY, hiY)};
      Point2 b{a.x + ux * length, a.y + uy * length};
      if (b.x < loX || b.x > hiX || b.y < loY || b.y > hiY) continue;
      Polyline line{a, b};
      bool separated = true;
      for (const Polyline& other : placed)
        if (polylineToPolylineDistance(line, other) < params.minSeparation) {
          separated = false;
          break;
        }
      if (!separated) continue;
      std::snprintf(id, sizeof id, "r%04d", i);
      network.addSegment(id, line);
      placed.push_back(std::move(line));
      ok = true;
    }
    if (!ok)
      throw DataError("randomNetwork: cannot place segment " + std::to_string(i) +
                      ", sheet too crowded for the separation constraint");
  }
  return network;
}

ByteRaster blankSheet(const SyntheticParams& params, Rgb background) {
  GeoTransform t{params.originX, params.originY, params.pixelSize};
  ByteRaster sheet(params.width, params.height, 3, BandSemantics::rgb, t);
  std::ranges::fill(sheet.band(0), background.r);
  std::ranges::fill(sheet.band(1), background.g);
  std::ranges::fill(sheet.band(2), background.b);
  return sheet;
}

ByteRaster flipLabels(const ByteRaster& labels, double rate, std::uint64_t seed) {
  if (labels.bandCount() != 1) throw DataError("flipLabels: labels must be single-band");
  if (rate < 0.0 || rate > 1.0) throw ConfigError("flipLabels: rate must be in [0, 1]");
  ByteRaster out = labels;
  Rng rng(subSeed(seed, "fixture/labelflip"));
  auto px = out.band(0);
  for (std::size_t i = 0; i < px.size(); ++i) {
    if (rng.uniformReal() >= rate) continue;
    // Uniform over the other five labels.
    auto offset = static_cast<std::uint8_t>(rng.uniformInt(kRoadClassCount) + 1);
    px[i] = static_cast<std::uint8_t>((px[i] + offset) % (kRoadClassCount + 1));
  }
  return out;
}

ProbabilityField noisyEnsembleMember(const ProbabilityField& field, double strength,
                                     std::uint64_t seed) {
  ProbabilityField out = field;
  Rng rng(seed);
  float* bands[kProbabilityBands];
  for (int b = 0; b < kProbabilityBands; ++b) bands[b] = out.band(b).data();
  for (std::size_t i = 0; i < out.pixelCount(); ++i) {
    double sum = 0.0;
    for (int b = 0; b < kProbabilityBands; ++b) {
      double v = bands[b][i] + strength * (rng.uniformReal() - 0.5);
      v = std::max(v, 0.0);
      bands[b][i] = static_cast<float>(v);
      sum += v;
    }
    if (sum <= 0.0) {
      for (int b = 0; b < kProbabilityBands; ++b)
        bands[b][i] = 1.0f / static_cast<float>(kProbabilityBands);
    } else {
      float inv = static_cast<float>(1.0 / sum);
      for (int b = 0; b < kProbabilityBands; ++b) bands[b][i] *= inv;
    }
  }
  return out;
}

std::vector<double> gridCoordinates(double lo, double hi, double spacing) {
  if (spacing <= 0.0) throw ConfigError("gridCoordinates: spacing must be positive");
  if (lo > hi) std::swap(lo, hi);
  std::vector<double> coords;
  double first = std::floor(lo / spacing);
  double last = std::ceil(hi / spacing);
  for (double k = first; k <= last; k += 1.0) coords.push_back(k * spacing);
  return coords;
}

ClassifiedNetwork classifiedTruth(const RoadNetwork& network,
                                  const std::map<std::string, RoadClass>& assignment) {
  ClassifiedNetwork truth;
  for (const auto& [id, segment] : network.segments()) {
    auto it = assignment.find(id);
    if (it == assignment.end()) throw DataError("classifiedTruth: no class for segment " + id);
    Section section;
    section.line = segment.line;
    section.roadClass = it->second;
    section.parentSegment = id;
    truth.sections().emplace(id + "#0", std::move(section));
  }
  return truth;
}

}  // namespace roadvec
