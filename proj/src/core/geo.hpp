#pragma once

#include <cmath>

namespace roadvec {

// Axis-aligned georeferencing for a square-pixel grid. (originX, originY) is
// the map position, in meters, of the outer corner of pixel (row 0, col 0);
// rows grow towards smaller y (north-up).
struct GeoTransform {
  double originX = 0.0;
  double originY = 0.0;
  double pixelSize = 1.25;

  double pixelCenterX(double col) const { return originX + (col + 0.5) * pixelSize; }
  double pixelCenterY(double row) const { return originY - (row + 0.5) * pixelSize; }

  // Fractional pixel coordinates of a map point; (0,0) at the corner origin.
  double colOf(double x) const { return (x - originX) / pixelSize; }
  double rowOf(double y) const { return (originY - y) / pixelSize; }

  bool almostEqual(const GeoTransform& o, double tol = 1e-9) const {
    return std::abs(originX - o.originX) <= tol && std::abs(originY - o.originY) <= tol &&
           std::abs(pixelSize - o.pixelSize) <= tol;
  }
};

}  // namespace roadvec
