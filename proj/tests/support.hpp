#pragma once

// Shared test helpers: scratch directories, random fixtures, and brute-force
// oracles kept deliberately independent of the library code under test.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "core/geometry.hpp"
#include "core/raster.hpp"
#include "core/rng.hpp"

namespace testsupport {

// Fresh scratch directory under the system temp root, wiped on entry.
inline std::filesystem::path scratchDir(const std::string& name) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "roadvec_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

// Brute-force flood-fill labeling, the oracle for everything connectivity
// related. 0 = background, 1.. = component ids in scan order.
inline std::vector<int> floodLabels(const roadvec::ByteRaster& mask, int connectivity) {
  int w = mask.width(), h = mask.height();
  std::vector<int> labels(static_cast<std::size_t>(w) * h, 0);
  auto fg = mask.band(0);
  int next = 0;
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < labels.size(); ++start) {
    if (!fg[start] || labels[start] != 0) continue;
    ++next;
    labels[start] = next;
    stack.assign(1, start);
    while (!stack.empty()) {
      std::size_t p = stack.back();
      stack.pop_back();
      int row = static_cast<int>(p) / w, col = static_cast<int>(p) % w;
      for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          if (dr == 0 && dc == 0) continue;
          if (connectivity == 4 && dr != 0 && dc != 0) continue;
          int r = row + dr, c = col + dc;
          if (r < 0 || r >= h || c < 0 || c >= w) continue;
          std::size_t q = static_cast<std::size_t>(r) * w + c;
          if (fg[q] && labels[q] == 0) {
            labels[q] = next;
            stack.push_back(q);
          }
        }
      }
    }
  }
  return labels;
}

inline int floodComponentCount(const roadvec::ByteRaster& mask, int connectivity) {
  const auto labels = floodLabels(mask, connectivity);
  int count = 0;
  for (int v : labels) count = std::max(count, v);
  return count;
}

// Random binary mask built from discs, bars, and salt noise; shapes varied
// enough to exercise thinning and component analysis.
inline roadvec::ByteRaster randomBlobMask(int width, int height, roadvec::Rng& rng) {
  roadvec::ByteRaster mask(width, height, 1, roadvec::BandSemantics::binaryMask);
  auto data = mask.band(0);
  auto set = [&](int row, int col) {
    if (row >= 0 && row < height && col >= 0 && col < width)
      data[static_cast<std::size_t>(row) * width + col] = 1;
  };
  int discs = 2 + static_cast<int>(rng.uniformInt(4));
  for (int i = 0; i < discs; ++i) {
    int cy = static_cast<int>(rng.uniformInt(static_cast<std::uint64_t>(height)));
    int cx = static_cast<int>(rng.uniformInt(static_cast<std::uint64_t>(width)));
    int radius = 2 + static_cast<int>(rng.uniformInt(7));
    for (int row = cy - radius; row <= cy + radius; ++row)
      for (int col = cx - radius; col <= cx + radius; ++col)
        if ((row - cy) * (row - cy) + (col - cx) * (col - cx) <= radius * radius) set(row, col);
  }
  int bars = 1 + static_cast<int>(rng.uniformInt(3));
  for (int i = 0; i < bars; ++i) {
    int row = static_cast<int>(rng.uniformInt(static_cast<std::uint64_t>(height)));
    int col = static_cast<int>(rng.uniformInt(static_cast<std::uint64_t>(width)));
    int len = 10 + static_cast<int>(rng.uniformInt(30));
    bool horizontal = rng.uniformInt(2) == 0;
    int thick = 1 + static_cast<int>(rng.uniformInt(4));
    for (int a = 0; a < len; ++a)
      for (int b = 0; b < thick; ++b)
        horizontal ? set(row + b, col + a) : set(row + a, col + b);
  }
  for (std::size_t p = 0; p < data.size(); ++p)
    if (rng.uniformReal() < 0.01) data[p] = 1;
  return mask;
}

// Probability field with every pixel one-hot on bandFor(pixel) (0..5).
template <typename F>
roadvec::ProbabilityField oneHotField(int width, int height, roadvec::GeoTransform transform,
                                      F bandFor) {
  roadvec::ProbabilityField field(width, height, transform);
  for (std::size_t p = 0; p < field.pixelCount(); ++p)
    field.band(bandFor(p))[p] = 1.0f;
  return field;
}

// Random normalized field, uniformly noisy across all six bands.
inline roadvec::ProbabilityField randomField(int width, int height,
                                             roadvec::GeoTransform transform,
                                             roadvec::Rng& rng) {
  roadvec::ProbabilityField field(width, height, transform);
  for (std::size_t p = 0; p < field.pixelCount(); ++p) {
    double values[roadvec::kProbabilityBands];
    double sum = 0.0;
    for (double& v : values) {
      v = rng.uniformReal() + 1e-3;
      sum += v;
    }
    for (int b = 0; b < roadvec::kProbabilityBands; ++b)
      field.band(b)[p] = static_cast<float>(values[b] / sum);
  }
  return field;
}

// Exact perpendicular-distance check used against the simplifier.
inline double maxVertexDeviation(const roadvec::Polyline& input,
                                 const roadvec::Polyline& simplified) {
  double worst = 0.0;
  for (const auto& v : input)
    worst = std::max(worst, roadvec::pointToPolylineDistance(v, simplified));
  return worst;
}

}  // namespace testsupport
