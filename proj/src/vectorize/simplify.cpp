#include "vectorize/simplify.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace roadvec {

namespace {

void douglasPeucker(const Polyline& line, std::size_t first, std::size_t last, double epsilon,
                    std::vector<bool>& keep) {
  std::vector<std::pair<std::size_t, std::size_t>> stack{{first, last}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    if (hi <= lo + 1) continue;
    double maxDist = -1.0;
    std::size_t maxIdx = lo;
    for (std::size_t i = lo + 1; i < hi; ++i) {
      double d = pointToSegmentDistance(line[i], line[lo], line[hi]);
      if (d > maxDist) {
        maxDist = d;
        maxIdx = i;
      }
    }
    if (maxDist > epsilon) {
      keep[maxIdx] = true;
      stack.push_back({lo, maxIdx});
      stack.push_back({maxIdx, hi});
    }
  }
}

}  // namespace

Polyline simplifyPolyline(const Polyline& line, double epsilon) {
  if (!isValidPolyline(line)) throw DataError("simplifyPolyline: invalid polyline");
  if (line.size() <= 2) return line;

  std::vector<bool> keep(line.size(), false);
  keep.front() = keep.back() = true;

  if (line.front() == line.back()) {
    // Ring: anchor on the vertex farthest from the seam.
    std::size_t far = 1;
    double farDist = -1.0;
    for (std::size_t i = 1; i + 1 < line.size(); ++i) {
      double d = distance(line[i], line.front());
      if (d > farDist) {
        farDist = d;
        far = i;
      }
    }
    keep[far] = true;
    douglasPeucker(line, 0, far, epsilon, keep);
    douglasPeucker(line, far, line.size() - 1, epsilon, keep);
  } else {
    douglasPeucker(line, 0, line.size() - 1, epsilon, keep);
  }

  Polyline out;
  for (std::size_t i = 0; i < line.size(); ++i)
    if (keep[i]) out.push_back(line[i]);
  return out;
}

void simplifyNetwork(RoadNetwork& network, double epsilon) {
  for (auto& [id, seg] : network.segments()) seg.line = simplifyPolyline(seg.line, epsilon);
}

std::size_t pruneSpurs(RoadNetwork& network, double minLength) {
  auto& segments = network.segments();
  auto& nodes = network.nodes();
  std::size_t pruned = 0;
  while (true) {
    std::map<int, int> degree;
    for (const auto& [id, seg] : segments) {
      ++degree[seg.startNode];
      ++degree[seg.endNode];
    }
    std::string spurId;
    double spurLen = minLength;
    for (const auto& [id, seg] : segments) {
      int d0 = degree[seg.startNode];
      int d1 = degree[seg.endNode];
      bool dangle = (d0 == 1 && d1 >= 3) || (d1 == 1 && d0 >= 3);
      if (!dangle) continue;
      double len = polylineLength(seg.line);
      if (len < spurLen) {
        spurLen = len;
        spurId = id;
      }
    }
    if (spurId.empty()) break;

    Segment spur = segments.at(spurId);
    segments.erase(spurId);
    ++pruned;
    for (int nodeId : {spur.startNode, spur.endNode}) {
      int degree = network.nodeDegree(nodeId);
      if (degree == 0) {
        nodes.erase(nodeId);
        continue;
      }
      if (degree != 2) continue;
      // The junction is a plain pass-through now; stitch the two survivors
      // back into one segment.
      std::vector<std::string> touching;
      for (const auto& [id, seg] : segments)
        if (seg.startNode == nodeId || seg.endNode == nodeId) touching.push_back(id);
      if (touching.size() != 2) continue;  // one segment loops through twice
      Segment a = segments.at(touching[0]);
      Segment b = segments.at(touching[1]);
      if (a.endNode != nodeId) {
        std::reverse(a.line.begin(), a.line.end());
        std::swap(a.startNode, a.endNode);
      }
      if (b.startNode != nodeId) {
        std::reverse(b.line.begin(), b.line.end());
        std::swap(b.startNode, b.endNode);
      }
      Segment merged;
      merged.line = std::move(a.line);
      merged.line.insert(merged.line.end(), b.line.begin() + 1, b.line.end());
      merged.startNode = a.startNode;
      merged.endNode = b.endNode;
      std::string keepId = std::min(touching[0], touching[1]);
      segments.erase(touching[0]);
      segments.erase(touching[1]);
      segments.emplace(keepId, std::move(merged));
      nodes.erase(nodeId);
    }
  }
  return pruned;
}

}  // namespace roadvec
