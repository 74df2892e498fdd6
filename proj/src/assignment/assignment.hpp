#pragma once

#include <array>
#include <string>
#include <vector>

#include "core/network.hpp"
#include "core/raster.hpp"

namespace roadvec {

struct AssignmentParams {
  double partLength = 10.0;      // cap on discretization part length, m
  double minSectionLength = 80.0;  // sections shorter than this get merged, m
  double zonalBuffer = 6.0;      // radius of the pixel-averaging corridor, m
  double endTrim = 20.0;         // ignored length at section ends, m

  void validate() const;
};

// Mean class probabilities of one discretization part. start/end are exact
// arc-length positions so downstream split points carry no rounding drift.
struct ZonalPart {
  double start = 0.0;
  double end = 0.0;
  std::array<double, kRoadClassCount> meanProbs{};
  bool interpolated = false;  // no pixel centers in the buffer, value borrowed

  double length() const { return end - start; }
  int argmaxClassIndex() const;  // 0..4, ties to the lower index
};

struct ZonalProfile {
  std::vector<ZonalPart> parts;  // contiguous, covering [0, segment length]
};

struct SplitPoint {
  double distance = 0.0;  // arc length along the segment, m
  int beforeClassIndex = 0;
  int afterClassIndex = 0;
};

// Contiguous piece of a segment with a provisional class, in arc length.
struct SectionSpan {
  double start = 0.0;
  double end = 0.0;
  int classIndex = 0;

  double length() const { return end - start; }
};

struct ClassifyResult {
  ClassifiedNetwork network;
  std::vector<std::string> failures;  // "segment: reason", processing continued
};

// Part boundaries 0 = b0 < ... < bn = length with n = ceil(length/partLength)
// equal parts, so every part is as long as possible without exceeding the cap.
std::vector<double> discretizeSegment(const Polyline& line, double partLength);

// Per part, the mean of each class band over pixels whose centers lie within
// `buffer` of the part polyline. Parts covering no pixel center are flagged
// and filled by linear interpolation between their non-empty neighbors.
ZonalProfile zonalMeanProfile(const Polyline& line, const std::vector<double>& boundaries,
                              const ProbabilityField& field, double buffer);

// A split point at every shared part boundary where the argmax class flips.
std::vector<SplitPoint> detectSplitCandidates(const ZonalProfile& profile);

// Merge heuristics for sections shorter than minLength, shortest first:
// equal-class neighbors absorb the short section wholesale, unequal ones
// split it at the midpoint, a sole neighbor takes it over. Adjacent sections
// of equal class are always coalesced. Total length is conserved exactly.
std::vector<SectionSpan> filterShortSections(std::vector<SectionSpan> sections,
                                             double minLength);

// Argmax class of the zonal mean over the section with endTrim meters ignored
// at each end (whole section when shorter than twice the trim; falls back to
// the untrimmed extent when the trimmed corridor covers no pixels).
RoadClass assignSectionClass(const Polyline& section, const ProbabilityField& field,
                             double buffer, double endTrim,
                             std::array<double, kRoadClassCount>* meansOut = nullptr);

// Full per-segment chain: discretize, profile, split, filter, assign. Section
// ids are "<segment>#<k>" in order along the segment. Failing segments are
// reported and skipped, the rest of the network still classifies.
ClassifyResult classifyNetwork(const RoadNetwork& network, const ProbabilityField& field,
                               const AssignmentParams& params = {});

}  // namespace roadvec
