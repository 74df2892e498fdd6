#include "vectorize/gridfilter.hpp"

#include <cmath>

namespace roadvec {

void GridSpec::validate() const {
  if (xCoordinates.empty() && yCoordinates.empty())
    throw ConfigError("grid spec has no coordinates");
  for (const auto* coords : {&xCoordinates, &yCoordinates})
    for (std::size_t i = 1; i < coords->size(); ++i)
      if ((*coords)[i] <= (*coords)[i - 1])
        throw ConfigError("grid coordinates must be strictly increasing");
  if (buffer <= 0.0 || netTolerance <= 0.0)
    throw ConfigError("grid tolerances must be positive");
}

namespace {

// True when every sample lies within tol of one common grid coordinate.
bool allNearOneCoordinate(const Polyline& line, bool useY, const std::vector<double>& coords,
                          double tol) {
  for (double g : coords) {
    bool all = true;
    for (const Point2& p : line) {
      if (std::abs((useY ? p.y : p.x) - g) > tol) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

bool matchesGridLine(const Polyline& line, bool horizontal, const GridSpec& grid) {
  const auto& coords = horizontal ? grid.yCoordinates : grid.xCoordinates;
  if (coords.empty()) return false;
  if (!allNearOneCoordinate(line, horizontal, coords, grid.buffer)) return false;
  double driftAcross = horizontal ? line.back().y - line.front().y : line.back().x - line.front().x;
  double extentAlong = horizontal ? line.back().x - line.front().x : line.back().y - line.front().y;
  return std::abs(driftAcross) <= grid.netTolerance &&
         10.0 * std::abs(driftAcross) < std::abs(extentAlong);
}

}  // namespace

GridFilterResult filterGridLines(const RoadNetwork& network, const GridSpec& grid) {
  grid.validate();
  GridFilterResult result;
  for (const auto& [id, seg] : network.segments()) {
    bool isGrid = matchesGridLine(seg.line, true, grid) || matchesGridLine(seg.line, false, grid);
    (isGrid ? result.removed : result.kept).addSegment(id, seg.line);
  }
  return result;
}

}  // namespace roadvec
