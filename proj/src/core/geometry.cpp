#include "core/geometry.hpp"

#include <algorithm>
#include <limits>

namespace roadvec {

double polylineLength(const Polyline& line) {
  double len = 0.0;
  for (std::size_t i = 1; i < line.size(); ++i) len += distance(line[i - 1], line[i]);
  return len;
}

bool isValidPolyline(const Polyline& line) {
  if (line.size() < 2) return false;
  for (std::size_t i = 1; i < line.size(); ++i) {
    if (line[i] == line[i - 1]) return false;
  }
  return polylineLength(line) > 0.0;
}

double pointToSegmentDistance(const Point2& p, const Point2& a, const Point2& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  if (len2 == 0.0) return distance(p, a);
  double t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

double pointToPolylineDistance(const Point2& p, const Polyline& line) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < line.size(); ++i) {
    best = std::min(best, pointToSegmentDistance(p, line[i - 1], line[i]));
  }
  if (line.size() == 1) best = distance(p, line[0]);
  return best;
}

std::vector<double> cumulativeLengths(const Polyline& line) {
  std::vector<double> cum(line.size(), 0.0);
  for (std::size_t i = 1; i < line.size(); ++i) {
    cum[i] = cum[i - 1] + distance(line[i - 1], line[i]);
  }
  return cum;
}

Point2 pointAlong(const Polyline& line, double s) {
  const auto cum = cumulativeLengths(line);
  const double total = cum.back();
  if (s <= 0.0) return line.front();
  if (s >= total) return line.back();
  auto it = std::upper_bound(cum.begin(), cum.end(), s);
  const std::size_t i = static_cast<std::size_t>(it - cum.begin());  // cum[i-1] <= s < cum[i]
  const double segLen = cum[i] - cum[i - 1];
  const double t = segLen > 0.0 ? (s - cum[i - 1]) / segLen : 0.0;
  return {line[i - 1].x + t * (line[i].x - line[i - 1].x),
          line[i - 1].y + t * (line[i].y - line[i - 1].y)};
}

Polyline polylineSubstring(const Polyline& line, double from, double to) {
  const auto cum = cumulativeLengths(line);
  const double total = cum.back();
  from = std::clamp(from, 0.0, total);
  to = std::clamp(to, 0.0, total);

  Polyline out;
  out.push_back(pointAlong(line, from));
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (cum[i] > from && cum[i] < to) {
      if (!(line[i] == out.back())) out.push_back(line[i]);
    }
  }
  const Point2 end = pointAlong(line, to);
  if (!(end == out.back())) out.push_back(end);
  if (out.size() < 2) out.push_back(end);  // degenerate request; caller validates
  return out;
}

namespace {

int orientation(const Point2& a, const Point2& b, const Point2& c) {
  double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return v > 0.0 ? 1 : v < 0.0 ? -1 : 0;
}

bool segmentsIntersect(const Point2& a1, const Point2& a2, const Point2& b1, const Point2& b2) {
  int o1 = orientation(a1, a2, b1), o2 = orientation(a1, a2, b2);
  int o3 = orientation(b1, b2, a1), o4 = orientation(b1, b2, a2);
  if (o1 != o2 && o3 != o4) return true;
  return false;  // collinear overlap is caught by the endpoint distances below
}

}  // namespace

double segmentToSegmentDistance(const Point2& a1, const Point2& a2, const Point2& b1,
                                const Point2& b2) {
  if (segmentsIntersect(a1, a2, b1, b2)) return 0.0;
  return std::min(std::min(pointToSegmentDistance(a1, b1, b2), pointToSegmentDistance(a2, b1, b2)),
                  std::min(pointToSegmentDistance(b1, a1, a2), pointToSegmentDistance(b2, a1, a2)));
}

double polylineToPolylineDistance(const Polyline& a, const Polyline& b) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < a.size(); ++i)
    for (std::size_t j = 1; j < b.size(); ++j)
      best = std::min(best, segmentToSegmentDistance(a[i - 1], a[i], b[j - 1], b[j]));
  return best;
}

BoundingBox boundingBox(const Polyline& line, double pad) {
  BoundingBox bb{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
                 -std::numeric_limits<double>::infinity(),
                 -std::numeric_limits<double>::infinity()};
  for (const auto& p : line) {
    bb.minX = std::min(bb.minX, p.x);
    bb.minY = std::min(bb.minY, p.y);
    bb.maxX = std::max(bb.maxX, p.x);
    bb.maxY = std::max(bb.maxY, p.y);
  }
  bb.minX -= pad;
  bb.minY -= pad;
  bb.maxX += pad;
  bb.maxY += pad;
  return bb;
}

}  // namespace roadvec
