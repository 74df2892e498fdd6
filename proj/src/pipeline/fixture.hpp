#pragma once

#include "core/network.hpp"
#include "core/raster.hpp"
#include "pipeline/config.hpp"

namespace roadvec {

// Random test network of straight, well-separated road segments, none of
// them close to axis-aligned (so the coordinate-grid filter never bites).
// Segment ids are "r0000", "r0001", ... in creation order. Deterministic in
// the seed; throws DataError when the sheet cannot fit the requested count.
RoadNetwork randomNetwork(const SyntheticParams& params, std::uint64_t seed);

// Blank sheet in the paper tone covering the synthetic extent.
ByteRaster blankSheet(const SyntheticParams& params, Rgb background);

// Replaces each label with probability `rate` by a different label drawn
// uniformly from the remaining 0..5 values.
ByteRaster flipLabels(const ByteRaster& labels, double rate, std::uint64_t seed);

// Randomly perturbed copy of a field, the stand-in for one ensemble member:
// per band, adds strength*(u-0.5) noise, clamps at 0, renormalizes.
ProbabilityField noisyEnsembleMember(const ProbabilityField& field, double strength,
                                     std::uint64_t seed);

// All multiples of spacing covering [lo, hi].
std::vector<double> gridCoordinates(double lo, double hi, double spacing);

// Truth network as a classified network (one section per segment), the
// reference side of the closed-loop evaluation.
ClassifiedNetwork classifiedTruth(const RoadNetwork& network,
                                  const std::map<std::string, RoadClass>& assignment);

}  // namespace roadvec
