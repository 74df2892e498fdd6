#pragma once

#include "core/geometry.hpp"
#include "core/network.hpp"

namespace roadvec {

inline constexpr double kDefaultSimplifyEpsilon = 1.9;  // just above the 1.77 m diagonal pitch

// Douglas-Peucker: keeps a subsequence of the input vertices, endpoints
// always included, such that every dropped vertex lies within epsilon of the
// output. Closed polylines are anchored at the vertex farthest from the start
// so rings do not collapse onto their seam.
Polyline simplifyPolyline(const Polyline& line, double epsilon = kDefaultSimplifyEpsilon);

// Simplifies every segment geometry in place; node coordinates (segment
// endpoints) are never moved.
void simplifyNetwork(RoadNetwork& network, double epsilon = kDefaultSimplifyEpsilon);

// Removes skeleton twigs left by blobs on the mask corridor: a spur is a
// segment with one free (degree-1) endpoint hanging off a junction. Spurs
// shorter than minLength are pruned shortest-first; a junction left with
// exactly two survivors is dissolved into one polyline under the smaller id,
// so a road piece severed by a twig is rejoined before its own length is
// judged. Segments free at both ends are never touched. Returns the number
// of pruned segments.
std::size_t pruneSpurs(RoadNetwork& network, double minLength);

}  // namespace roadvec
