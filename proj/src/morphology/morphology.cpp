#include "morphology/morphology.hpp"

#include <array>
#include <string>

#include "kernels/kernels.hpp"

namespace roadvec {

void requireBinaryMask(const ByteRaster& mask, const char* who) {
  if (mask.bandCount() != 1)
    throw DataError(std::string(who) + ": mask must be single-band");
  auto px = mask.band(0);
  for (std::size_t i = 0; i < px.size(); ++i)
    if (px[i] > 1)
      throw DataError(std::string(who) + ": non-binary value " + std::to_string(int(px[i])) +
                      " at pixel " + std::to_string(i));
}

ComponentLabeling connectedComponents(const ByteRaster& mask, int connectivity) {
  requireBinaryMask(mask, "connectedComponents");
  if (connectivity != 4 && connectivity != 8)
    throw ConfigError("connectivity must be 4 or 8");
  int w = mask.width(), h = mask.height();
  auto px = mask.band(0);
  ComponentLabeling out;
  out.width = w;
  out.height = h;
  out.labels.assign(px.size(), 0);

  const int dx8[] = {-1, 0, 1, -1, 1, -1, 0, 1};
  const int dy8[] = {-1, -1, -1, 0, 0, 1, 1, 1};
  const int dx4[] = {0, -1, 1, 0};
  const int dy4[] = {-1, 0, 0, 1};
  const int* dx = connectivity == 8 ? dx8 : dx4;
  const int* dy = connectivity == 8 ? dy8 : dy4;
  int nn = connectivity;

  std::vector<std::int32_t> stack;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      std::size_t idx = static_cast<std::size_t>(y) * w + x;
      if (px[idx] == 0 || out.labels[idx] != 0) continue;
      std::int32_t label = static_cast<std::int32_t>(out.counts.size()) + 1;
      std::size_t count = 0;
      out.labels[idx] = label;
      stack.push_back(static_cast<std::int32_t>(idx));
      while (!stack.empty()) {
        std::int32_t cur = stack.back();
        stack.pop_back();
        ++count;
        int cy = cur / w, cx = cur % w;
        for (int k = 0; k < nn; ++k) {
          int ny = cy + dy[k], nx = cx + dx[k];
          if (ny < 0 || ny >= h || nx < 0 || nx >= w) continue;
          std::size_t ni = static_cast<std::size_t>(ny) * w + nx;
          if (px[ni] != 0 && out.labels[ni] == 0) {
            out.labels[ni] = label;
            stack.push_back(static_cast<std::int32_t>(ni));
          }
        }
      }
      out.counts.push_back(count);
    }
  }
  return out;
}

ByteRaster removeSmallComponents(const ByteRaster& mask, std::size_t minArea) {
  ComponentLabeling cc = connectedComponents(mask, 8);
  ByteRaster out = mask;
  out.setSemantics(BandSemantics::binaryMask);
  auto px = out.band(0);
  for (std::size_t i = 0; i < px.size(); ++i)
    if (cc.labels[i] != 0 && cc.counts[static_cast<std::size_t>(cc.labels[i]) - 1] < minArea)
      px[i] = 0;
  return out;
}

namespace {

ByteRaster morph3x3(const ByteRaster& mask, std::uint8_t border, bool isMax, const char* who) {
  requireBinaryMask(mask, who);
  int w = mask.width(), h = mask.height();
  auto src = mask.band(0);
  // Horizontal pass into a scratch raster, then vertical pass row-triples.
  std::vector<std::uint8_t> horiz(src.size());
  for (int y = 0; y < h; ++y) {
    const std::uint8_t* in = src.data() + static_cast<std::size_t>(y) * w;
    std::uint8_t* outRow = horiz.data() + static_cast<std::size_t>(y) * w;
    if (isMax)
      kernels::rowMax3U8(in, outRow, static_cast<std::size_t>(w), border);
    else
      kernels::rowMin3U8(in, outRow, static_cast<std::size_t>(w), border);
  }
  ByteRaster out(w, h, 1, BandSemantics::binaryMask, mask.transform());
  auto dst = out.band(0);
  std::vector<std::uint8_t> borderRow(static_cast<std::size_t>(w), border);
  for (int y = 0; y < h; ++y) {
    const std::uint8_t* above = y > 0 ? horiz.data() + static_cast<std::size_t>(y - 1) * w
                                      : borderRow.data();
    const std::uint8_t* cur = horiz.data() + static_cast<std::size_t>(y) * w;
    const std::uint8_t* below = y + 1 < h ? horiz.data() + static_cast<std::size_t>(y + 1) * w
                                          : borderRow.data();
    std::uint8_t* outRow = dst.data() + static_cast<std::size_t>(y) * w;
    if (isMax)
      kernels::max3U8(above, cur, below, outRow, static_cast<std::size_t>(w));
    else
      kernels::min3U8(above, cur, below, outRow, static_cast<std::size_t>(w));
  }
  return out;
}

}  // namespace

ByteRaster dilate3x3(const ByteRaster& mask) { return morph3x3(mask, 0, true, "dilate3x3"); }

ByteRaster erode3x3(const ByteRaster& mask) { return morph3x3(mask, 1, false, "erode3x3"); }

ByteRaster closeMask(const ByteRaster& mask) { return erode3x3(dilate3x3(mask)); }

namespace {

// Neighbor offsets in clockwise ring order starting north.
constexpr int kNx[8] = {0, 1, 1, 1, 0, -1, -1, -1};
constexpr int kNy[8] = {-1, -1, 0, 1, 1, 1, 0, -1};

struct SimpleLut {
  std::array<bool, 256> simple{};
  std::array<std::uint8_t, 256> degree{};

  SimpleLut() {
    for (int cfg = 0; cfg < 256; ++cfg) {
      int deg = 0;
      for (int i = 0; i < 8; ++i)
        if (cfg & (1 << i)) ++deg;
      degree[cfg] = static_cast<std::uint8_t>(deg);
      simple[cfg] = fgComponents(cfg) == 1 && bgComponentsTouchingCenter(cfg) == 1;
    }
  }

  // 8-connected components of foreground cells within the 3x3 ring.
  static int fgComponents(int cfg) {
    int comps = 0;
    int seen = 0;
    for (int i = 0; i < 8; ++i) {
      if (!(cfg & (1 << i)) || (seen & (1 << i))) continue;
      ++comps;
      int stack[8], top = 0;
      stack[top++] = i;
      seen |= 1 << i;
      while (top > 0) {
        int a = stack[--top];
        for (int b = 0; b < 8; ++b) {
          if (!(cfg & (1 << b)) || (seen & (1 << b))) continue;
          if (std::abs(kNx[a] - kNx[b]) <= 1 && std::abs(kNy[a] - kNy[b]) <= 1) {
            seen |= 1 << b;
            stack[top++] = b;
          }
        }
      }
    }
    return comps;
  }

  // 4-connected components of background cells within the ring that include
  // at least one 4-neighbor of the center (ring indices 0, 2, 4, 6).
  static int bgComponentsTouchingCenter(int cfg) {
    int comps = 0;
    int seen = 0;
    for (int i = 0; i < 8; ++i) {
      if ((cfg & (1 << i)) || (seen & (1 << i))) continue;
      bool touches = false;
      int stack[8], top = 0;
      stack[top++] = i;
      seen |= 1 << i;
      while (top > 0) {
        int a = stack[--top];
        if ((a & 1) == 0) touches = true;
        for (int b = 0; b < 8; ++b) {
          if ((cfg & (1 << b)) || (seen & (1 << b))) continue;
          if (std::abs(kNx[a] - kNx[b]) + std::abs(kNy[a] - kNy[b]) == 1) {
            seen |= 1 << b;
            stack[top++] = b;
          }
        }
      }
      if (touches) ++comps;
    }
    return comps;
  }
};

const SimpleLut& lut() {
  static const SimpleLut instance;
  return instance;
}

class ThinningGrid {
 public:
  explicit ThinningGrid(const ByteRaster& mask)
      : w_(mask.width()), h_(mask.height()), px_(mask.band(0).begin(), mask.band(0).end()) {}

  int neighborConfig(int x, int y) const {
    int cfg = 0;
    for (int i = 0; i < 8; ++i) {
      int nx = x + kNx[i], ny = y + kNy[i];
      if (nx >= 0 && nx < w_ && ny >= 0 && ny < h_ &&
          px_[static_cast<std::size_t>(ny) * w_ + nx])
        cfg |= 1 << i;
    }
    return cfg;
  }

  bool fg(int x, int y) const { return px_[static_cast<std::size_t>(y) * w_ + x] != 0; }
  void clear(int x, int y) { px_[static_cast<std::size_t>(y) * w_ + x] = 0; }

  // One directional subpass: sequentially delete simple non-endpoint pixels
  // whose neighbor in the given ring direction is background. Sequential
  // re-checking keeps every individual deletion topology-preserving. The scan
  // runs against the eating direction (north pass bottom-up, west pass
  // right-to-left) so a deletion never exposes a later-visited pixel as a new
  // border pixel; each pass peels exactly one layer and thick shapes thin
  // down to their centerline instead of one edge.
  std::size_t directionalPass(int dir) {
    std::size_t removed = 0;
    const bool yDescending = kNy[dir] < 0;
    const bool xDescending = kNx[dir] < 0;
    for (int yi = 0; yi < h_; ++yi) {
      int y = yDescending ? h_ - 1 - yi : yi;
      for (int xi = 0; xi < w_; ++xi) {
        int x = xDescending ? w_ - 1 - xi : xi;
        if (!fg(x, y)) continue;
        int cfg = neighborConfig(x, y);
        if (cfg & (1 << dir)) continue;  // not a border pixel for this direction
        if (lut().degree[cfg] <= 1) continue;  // endpoint
        if (!lut().simple[cfg]) continue;
        clear(x, y);
        ++removed;
      }
    }
    return removed;
  }

  // Deletes simple pixels participating in 2x2 all-foreground blocks.
  std::size_t blockCleanupPass() {
    std::size_t removed = 0;
    for (int y = 0; y + 1 < h_; ++y) {
      for (int x = 0; x + 1 < w_; ++x) {
        if (!(fg(x, y) && fg(x + 1, y) && fg(x, y + 1) && fg(x + 1, y + 1))) continue;
        const int bx[4] = {x, x + 1, x, x + 1};
        const int by[4] = {y, y, y + 1, y + 1};
        for (int k = 0; k < 4; ++k) {
          int cfg = neighborConfig(bx[k], by[k]);
          if (lut().simple[cfg]) {
            clear(bx[k], by[k]);
            ++removed;
            break;
          }
        }
      }
    }
    return removed;
  }

  std::vector<std::uint8_t> take() { return std::move(px_); }

 private:
  int w_, h_;
  std::vector<std::uint8_t> px_;
};

}  // namespace

ByteRaster skeletonize(const ByteRaster& mask) {
  requireBinaryMask(mask, "skeletonize");
  ThinningGrid grid(mask);
  // Ring directions north, south, east, west.
  const int dirs[4] = {0, 4, 2, 6};
  for (;;) {
    std::size_t removed = 0;
    do {
      removed = 0;
      for (int dir : dirs) removed += grid.directionalPass(dir);
    } while (removed > 0);
    if (grid.blockCleanupPass() == 0) break;
  }
  ByteRaster out(mask.width(), mask.height(), 1, BandSemantics::binaryMask, mask.transform());
  auto data = grid.take();
  std::copy(data.begin(), data.end(), out.band(0).begin());
  return out;
}

bool hasFullSquareBlock(const ByteRaster& mask) {
  int w = mask.width(), h = mask.height();
  auto px = mask.band(0);
  for (int y = 0; y + 1 < h; ++y) {
    const std::uint8_t* r0 = px.data() + static_cast<std::size_t>(y) * w;
    const std::uint8_t* r1 = r0 + w;
    for (int x = 0; x + 1 < w; ++x)
      if (r0[x] && r0[x + 1] && r1[x] && r1[x + 1]) return true;
  }
  return false;
}

}  // namespace roadvec
