#include "assignment/assignment.hpp"

#include <algorithm>
#include <cmath>

namespace roadvec {

namespace {

// Calls f(pixelIndex) for every pixel of the field whose center lies within
// radius of the polyline. Plain bounding-box scan; the zonal corridors are
// narrow, so the rejected fraction stays small.
template <typename F>
void forEachZonalPixel(const Polyline& line, double radius, const ProbabilityField& field,
                       F&& f) {
  const GeoTransform& t = field.transform();
  BoundingBox bb = boundingBox(line, radius);
  int w = field.width(), h = field.height();
  int rFirst = std::max(0, static_cast<int>(std::ceil(t.rowOf(bb.maxY) - 0.5)));
  int rLast = std::min(h - 1, static_cast<int>(std::floor(t.rowOf(bb.minY) - 0.5)));
  int cFirst = std::max(0, static_cast<int>(std::ceil(t.colOf(bb.minX) - 0.5)));
  int cLast = std::min(w - 1, static_cast<int>(std::floor(t.colOf(bb.maxX) - 0.5)));
  for (int r = rFirst; r <= rLast; ++r) {
    double y = t.pixelCenterY(r);
    for (int c = cFirst; c <= cLast; ++c) {
      Point2 p{t.pixelCenterX(c), y};
      if (pointToPolylineDistance(p, line) <= radius) f(static_cast<std::size_t>(r) * w + c);
    }
  }
}

// Mean class probabilities over the corridor; nullopt when no pixel center
// falls inside.
std::optional<std::array<double, kRoadClassCount>> zonalMean(const Polyline& line, double radius,
                                                             const ProbabilityField& field) {
  std::array<double, kRoadClassCount> sums{};
  std::size_t n = 0;
  const float* bands[kRoadClassCount];
  for (int b = 0; b < kRoadClassCount; ++b) bands[b] = field.band(b).data();
  forEachZonalPixel(line, radius, field, [&](std::size_t idx) {
    for (int b = 0; b < kRoadClassCount; ++b) sums[b] += bands[b][idx];
    ++n;
  });
  if (n == 0) return std::nullopt;
  for (double& s : sums) s /= static_cast<double>(n);
  return sums;
}

int argmaxClassOf(const std::array<double, kRoadClassCount>& probs) {
  int best = 0;
  for (int c = 1; c < kRoadClassCount; ++c)
    if (probs[c] > probs[best]) best = c;
  return best;
}

void coalesceEqualClasses(std::vector<SectionSpan>& spans) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    if (out > 0 && spans[out - 1].classIndex == spans[i].classIndex)
      spans[out - 1].end = spans[i].end;
    else
      spans[out++] = spans[i];
  }
  spans.resize(out);
}

}  // namespace

void AssignmentParams::validate() const {
  if (partLength <= 0.0) throw ConfigError("part length must be positive");
  if (minSectionLength <= 0.0) throw ConfigError("minimum section length must be positive");
  if (zonalBuffer <= 0.0) throw ConfigError("zonal buffer must be positive");
  if (endTrim <= 0.0) throw ConfigError("end trim must be positive");
}

int ZonalPart::argmaxClassIndex() const { return argmaxClassOf(meanProbs); }

std::vector<double> discretizeSegment(const Polyline& line, double partLength) {
  if (!isValidPolyline(line)) throw DataError("discretizeSegment: invalid polyline");
  if (partLength <= 0.0) throw ConfigError("discretizeSegment: part length must be positive");
  double length = polylineLength(line);
  int n = std::max(1, static_cast<int>(std::ceil(length / partLength)));
  std::vector<double> boundaries(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) boundaries[static_cast<std::size_t>(i)] = length * i / n;
  boundaries.back() = length;
  return boundaries;
}

ZonalProfile zonalMeanProfile(const Polyline& line, const std::vector<double>& boundaries,
                              const ProbabilityField& field, double buffer) {
  if (!isValidPolyline(line)) throw DataError("zonalMeanProfile: invalid polyline");
  if (boundaries.size() < 2) throw ConfigError("zonalMeanProfile: need at least one part");
  const GeoTransform& t = field.transform();
  BoundingBox bb = boundingBox(line, buffer);
  if (bb.maxX < t.originX || bb.minX > t.originX + field.width() * t.pixelSize ||
      bb.maxY < t.originY - field.height() * t.pixelSize || bb.minY > t.originY)
    throw DataError("zonalMeanProfile: segment lies outside the probability field");

  ZonalProfile profile;
  profile.parts.reserve(boundaries.size() - 1);
  for (std::size_t i = 0; i + 1 < boundaries.size(); ++i) {
    ZonalPart part;
    part.start = boundaries[i];
    part.end = boundaries[i + 1];
    Polyline piece = polylineSubstring(line, part.start, part.end);
    if (auto mean = zonalMean(piece, buffer, field)) {
      part.meanProbs = *mean;
    } else {
      part.interpolated = true;
    }
    profile.parts.push_back(std::move(part));
  }

  // Fill flagged parts from the nearest non-empty parts on each side,
  // weighting by distance between part midpoints.
  std::vector<std::size_t> filled;
  for (std::size_t i = 0; i < profile.parts.size(); ++i)
    if (!profile.parts[i].interpolated) filled.push_back(i);
  if (!filled.empty()) {
    for (std::size_t i = 0; i < profile.parts.size(); ++i) {
      ZonalPart& part = profile.parts[i];
      if (!part.interpolated) continue;
      auto right = std::ranges::lower_bound(filled, i);
      if (right == filled.end()) {
        part.meanProbs = profile.parts[filled.back()].meanProbs;
      } else if (right == filled.begin()) {
        part.meanProbs = profile.parts[filled.front()].meanProbs;
      } else {
        const ZonalPart& a = profile.parts[*(right - 1)];
        const ZonalPart& b = profile.parts[*right];
        double ma = (a.start + a.end) / 2.0, mb = (b.start + b.end) / 2.0;
        double w = ((part.start + part.end) / 2.0 - ma) / (mb - ma);
        for (int c = 0; c < kRoadClassCount; ++c)
          part.meanProbs[c] = (1.0 - w) * a.meanProbs[c] + w * b.meanProbs[c];
      }
    }
  }
  return profile;
}

std::vector<SplitPoint> detectSplitCandidates(const ZonalProfile& profile) {
  if (profile.parts.empty()) throw ConfigError("detectSplitCandidates: empty profile");
  std::vector<SplitPoint> candidates;
  int prev = profile.parts.front().argmaxClassIndex();
  for (std::size_t i = 1; i < profile.parts.size(); ++i) {
    int cur = profile.parts[i].argmaxClassIndex();
    if (cur != prev)
      candidates.push_back({profile.parts[i].start, prev, cur});
    prev = cur;
  }
  return candidates;
}

std::vector<SectionSpan> filterShortSections(std::vector<SectionSpan> sections,
                                             double minLength) {
  if (sections.empty()) return sections;
  coalesceEqualClasses(sections);
  while (sections.size() > 1) {
    std::size_t shortest = sections.size();
    for (std::size_t i = 0; i < sections.size(); ++i) {
      if (sections[i].length() >= minLength) continue;
      if (shortest == sections.size() || sections[i].length() < sections[shortest].length())
        shortest = i;
    }
    if (shortest == sections.size()) break;

    if (shortest == 0) {
      sections[1].start = sections[0].start;
      sections.erase(sections.begin());
    } else if (shortest == sections.size() - 1) {
      sections[shortest - 1].end = sections[shortest].end;
      sections.pop_back();
    } else if (sections[shortest - 1].classIndex == sections[shortest + 1].classIndex) {
      sections[shortest].classIndex = sections[shortest - 1].classIndex;
    } else {
      double mid = (sections[shortest].start + sections[shortest].end) / 2.0;
      sections[shortest - 1].end = mid;
      sections[shortest + 1].start = mid;
      sections.erase(sections.begin() + static_cast<std::ptrdiff_t>(shortest));
    }
    coalesceEqualClasses(sections);
  }
  return sections;
}

RoadClass assignSectionClass(const Polyline& section, const ProbabilityField& field,
                             double buffer, double endTrim,
                             std::array<double, kRoadClassCount>* meansOut) {
  if (!isValidPolyline(section)) throw DataError("assignSectionClass: invalid polyline");
  double length = polylineLength(section);
  std::optional<std::array<double, kRoadClassCount>> means;
  if (length > 2.0 * endTrim)
    means = zonalMean(polylineSubstring(section, endTrim, length - endTrim), buffer, field);
  if (!means) means = zonalMean(section, buffer, field);
  if (!means) throw DataError("assignSectionClass: no pixel centers in the zonal corridor");
  if (meansOut) *meansOut = *means;
  return RoadClass(argmaxClassOf(*means) + 1);
}

ClassifyResult classifyNetwork(const RoadNetwork& network, const ProbabilityField& field,
                               const AssignmentParams& params) {
  params.validate();
  ClassifyResult result;
  for (const auto& [segId, segment] : network.segments()) {
    try {
      std::vector<double> boundaries = discretizeSegment(segment.line, params.partLength);
      ZonalProfile profile =
          zonalMeanProfile(segment.line, boundaries, field, params.zonalBuffer);

      std::vector<SectionSpan> spans;
      for (const ZonalPart& part : profile.parts) {
        int cls = part.argmaxClassIndex();
        if (!spans.empty() && spans.back().classIndex == cls)
          spans.back().end = part.end;
        else
          spans.push_back({part.start, part.end, cls});
      }
      spans = filterShortSections(std::move(spans), params.minSectionLength);

      for (std::size_t k = 0; k < spans.size(); ++k) {
        Section section;
        section.parentSegment = segId;
        section.line = spans.size() == 1
                           ? segment.line
                           : polylineSubstring(segment.line, spans[k].start, spans[k].end);
        std::array<double, kRoadClassCount> means{};
        section.roadClass =
            assignSectionClass(section.line, field, params.zonalBuffer, params.endTrim, &means);
        section.meanProbs = means;
        result.network.sections().emplace(segId + "#" + std::to_string(k), std::move(section));
      }
    } catch (const DataError& e) {
      result.failures.push_back(segId + ": " + e.what());
    }
  }
  return result;
}

}  // namespace roadvec
