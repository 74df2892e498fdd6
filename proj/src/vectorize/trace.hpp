#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "core/network.hpp"
#include "core/raster.hpp"

namespace roadvec {

// Undirected pixel-adjacency edges of a skeleton raster. Pixels are flat
// indices (row * width + col); each edge is stored once with a < b.
struct SkeletonEdges {
  int width = 0;
  int height = 0;
  GeoTransform transform;
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  std::size_t isolatedPixels = 0;  // dropped foreground pixels with no neighbor
};

// One edge per 8-adjacent foreground pair, except that a diagonal edge is
// suppressed when the two pixels also connect through a common 4-neighbor
// (otherwise every L-corner would close a spurious triangle). Rejects inputs
// with a 2x2 foreground block.
SkeletonEdges traceSkeleton(const ByteRaster& skeleton);

// Dissolves maximal degree-2 chains into single polylines between nodes
// (pixels of degree != 2). A pure cycle yields one closed polyline starting
// at its lexicographically smallest pixel. Vertices are pixel centers in map
// coordinates.
RoadNetwork assembleSegments(const SkeletonEdges& edges);

}  // namespace roadvec
