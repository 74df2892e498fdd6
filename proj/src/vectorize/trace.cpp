#include "vectorize/trace.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include "morphology/morphology.hpp"

namespace roadvec {

SkeletonEdges traceSkeleton(const ByteRaster& skeleton) {
  requireBinaryMask(skeleton, "traceSkeleton");
  if (hasFullSquareBlock(skeleton))
    throw DataError("traceSkeleton: input has a 2x2 foreground block, not a skeleton");

  int w = skeleton.width(), h = skeleton.height();
  auto px = skeleton.band(0);
  auto at = [&](int y, int x) -> bool {
    return x >= 0 && x < w && y >= 0 && y < h && px[static_cast<std::size_t>(y) * w + x] != 0;
  };

  SkeletonEdges out;
  out.width = w;
  out.height = h;
  out.transform = skeleton.transform();

  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!at(y, x)) continue;
      std::int32_t a = y * w + x;
      bool hasNeighbor = false;
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx)
          if ((dy || dx) && at(y + dy, x + dx)) hasNeighbor = true;
      if (!hasNeighbor) {
        ++out.isolatedPixels;
        continue;
      }
      // Forward neighbors only (E, SW, S, SE) so each pair is emitted once.
      if (at(y, x + 1)) out.edges.emplace_back(a, a + 1);
      if (at(y + 1, x)) out.edges.emplace_back(a, a + w);
      // Diagonals are kept only when the two pixels share no foreground
      // 4-neighbor; otherwise the chain already connects through it.
      if (at(y + 1, x - 1) && !at(y, x - 1) && !at(y + 1, x))
        out.edges.emplace_back(a, a + w - 1);
      if (at(y + 1, x + 1) && !at(y, x + 1) && !at(y + 1, x))
        out.edges.emplace_back(a, a + w + 1);
    }
  }
  return out;
}

namespace {

std::string segmentName(int counter) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "s%06d", counter);
  return buf;
}

}  // namespace

RoadNetwork assembleSegments(const SkeletonEdges& edges) {
  std::map<std::int32_t, std::vector<std::int32_t>> adj;
  for (auto [a, b] : edges.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& [p, nbs] : adj) std::sort(nbs.begin(), nbs.end());

  RoadNetwork network;
  std::map<std::int32_t, int> pixelNode;
  auto center = [&](std::int32_t p) -> Point2 {
    int y = p / edges.width, x = p % edges.width;
    return {edges.transform.pixelCenterX(x), edges.transform.pixelCenterY(y)};
  };
  auto nodeFor = [&](std::int32_t p) {
    auto it = pixelNode.find(p);
    if (it != pixelNode.end()) return it->second;
    int id = network.addNode(center(p));
    pixelNode.emplace(p, id);
    return id;
  };

  std::set<std::pair<std::int32_t, std::int32_t>> visited;
  auto edgeKey = [](std::int32_t a, std::int32_t b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  };
  int counter = 0;

  auto emit = [&](const std::vector<std::int32_t>& path) {
    Segment seg;
    seg.startNode = nodeFor(path.front());
    seg.endNode = nodeFor(path.back());
    for (std::int32_t p : path) seg.line.push_back(center(p));
    network.segments().emplace(segmentName(counter++), std::move(seg));
  };

  // Chains between nodes (degree != 2 pixels), walked in ascending order.
  for (const auto& [p, nbs] : adj) {
    if (nbs.size() == 2) continue;
    for (std::int32_t nb : nbs) {
      if (visited.count(edgeKey(p, nb))) continue;
      std::vector<std::int32_t> path{p, nb};
      visited.insert(edgeKey(p, nb));
      while (adj.at(path.back()).size() == 2) {
        const auto& cur = adj.at(path.back());
        std::int32_t prev = path[path.size() - 2];
        std::int32_t next = cur[0] == prev ? cur[1] : cur[0];
        if (visited.count(edgeKey(path.back(), next))) break;  // closed loop back onto a node
        visited.insert(edgeKey(path.back(), next));
        path.push_back(next);
      }
      emit(path);
    }
  }

  // Remaining edges belong to pure degree-2 cycles; start each at its
  // smallest pixel.
  for (const auto& [p, nbs] : adj) {
    if (nbs.size() != 2) continue;
    std::int32_t first = nbs.front();
    if (visited.count(edgeKey(p, first))) {
      if (visited.count(edgeKey(p, nbs.back()))) continue;
      first = nbs.back();
    }
    std::vector<std::int32_t> path{p, first};
    visited.insert(edgeKey(p, first));
    while (path.back() != p) {
      const auto& cur = adj.at(path.back());
      std::int32_t prev = path[path.size() - 2];
      std::int32_t next = cur[0] == prev ? cur[1] : cur[0];
      visited.insert(edgeKey(path.back(), next));
      path.push_back(next);
    }
    emit(path);
  }

  return network;
}

}  // namespace roadvec
