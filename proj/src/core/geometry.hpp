#pragma once

#include <cmath>
#include <vector>

namespace roadvec {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
};

inline double distance(const Point2& a, const Point2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// Ordered vertices in map coordinates (meters). A valid polyline has at least
// two vertices, no two consecutive vertices identical, and positive length.
using Polyline = std::vector<Point2>;

double polylineLength(const Polyline& line);

bool isValidPolyline(const Polyline& line);

double pointToSegmentDistance(const Point2& p, const Point2& a, const Point2& b);

double pointToPolylineDistance(const Point2& p, const Polyline& line);

// Point at arc-length position s, clamped to [0, length].
Point2 pointAlong(const Polyline& line, double s);

// Sub-polyline between arc-length positions [from, to]; interior vertices are
// kept, the cut points become new endpoints. Requires from < to.
Polyline polylineSubstring(const Polyline& line, double from, double to);

// Cumulative arc length at each vertex (size() entries, first is 0).
std::vector<double> cumulativeLengths(const Polyline& line);

double segmentToSegmentDistance(const Point2& a1, const Point2& a2, const Point2& b1,
                                const Point2& b2);

double polylineToPolylineDistance(const Polyline& a, const Polyline& b);

struct BoundingBox {
  double minX, minY, maxX, maxY;
};

BoundingBox boundingBox(const Polyline& line, double pad = 0.0);

}  // namespace roadvec
