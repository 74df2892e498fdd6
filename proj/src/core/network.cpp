#include "core/network.hpp"

#include <cmath>

namespace roadvec {

int RoadNetwork::addNode(Point2 p) {
  int id = nextNodeId_++;
  nodes_.emplace(id, p);
  return id;
}

int RoadNetwork::nodeAt(Point2 p, double tol) {
  for (const auto& [id, q] : nodes_)
    if (std::abs(q.x - p.x) <= tol && std::abs(q.y - p.y) <= tol) return id;
  return addNode(p);
}

void RoadNetwork::addSegment(const std::string& id, Polyline line) {
  if (!isValidPolyline(line)) throw DataError("segment " + id + " has an invalid polyline");
  Segment seg;
  seg.startNode = nodeAt(line.front());
  seg.endNode = nodeAt(line.back());
  seg.line = std::move(line);
  if (!segments_.emplace(id, std::move(seg)).second)
    throw DataError("duplicate segment id " + id);
}

int RoadNetwork::nodeDegree(int nodeId) const {
  int deg = 0;
  for (const auto& [id, seg] : segments_) {
    if (seg.startNode == nodeId) ++deg;
    if (seg.endNode == nodeId) ++deg;
  }
  return deg;
}

double RoadNetwork::totalLength() const {
  double sum = 0.0;
  for (const auto& [id, seg] : segments_) sum += polylineLength(seg.line);
  return sum;
}

void RoadNetwork::validate() const {
  for (const auto& [id, seg] : segments_) {
    if (!isValidPolyline(seg.line)) throw DataError("segment " + id + " has an invalid polyline");
    auto checkEnd = [&](int nodeId, Point2 p, const char* which) {
      auto it = nodes_.find(nodeId);
      if (it == nodes_.end())
        throw DataError("segment " + id + " references missing " + which + " node");
      if (distance(it->second, p) > 1e-6)
        throw DataError("segment " + id + " " + which + " endpoint is off its node");
    };
    checkEnd(seg.startNode, seg.line.front(), "start");
    checkEnd(seg.endNode, seg.line.back(), "end");
  }
}

double ClassifiedNetwork::totalLength() const {
  double sum = 0.0;
  for (const auto& [id, sec] : sections_) sum += polylineLength(sec.line);
  return sum;
}

}  // namespace roadvec
