#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/network.hpp"

namespace roadvec {

// Known coordinate-grid line positions on a sheet. Kilometer grids print as
// thin straight lines that survive road extraction and must be filtered out.
struct GridSpec {
  std::vector<double> xCoordinates;  // vertical grid lines (meters)
  std::vector<double> yCoordinates;  // horizontal grid lines (meters)
  double buffer = 3.75;              // max vertex offset from the grid line (3 px)
  double netTolerance = 2.5;         // max |net axis drift| along the segment (2 px)

  void validate() const;  // coordinates strictly increasing, tolerances > 0
};

struct GridFilterResult {
  RoadNetwork kept;
  RoadNetwork removed;
};

// A segment is removed as a horizontal grid line iff (a) every vertex y lies
// within grid.buffer of one known grid y, (b) |y_last - y_first| (the
// telescoped sum of the per-edge drifts) <= netTolerance, and (c) that net
// drift, scaled by 10, is still smaller than the net x extent. Vertical grid
// lines mirror the rule with axes swapped. Everything else is kept untouched.
GridFilterResult filterGridLines(const RoadNetwork& network, const GridSpec& grid);

}  // namespace roadvec
