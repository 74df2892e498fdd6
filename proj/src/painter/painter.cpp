#include "painter/painter.hpp"

#include <algorithm>
#include <cmath>

#include "core/rng.hpp"

namespace roadvec {

namespace {

// Calls f(pixelIndex, along, perp) for every pixel center inside the oriented
// band around sub-segment a->b: |perp| <= reach, along in [-reach, len+reach].
// Rows are clipped against the band's corner quad so cost tracks the corridor
// area, not the bounding box of a diagonal segment.
template <typename F>
void forEachBandPixel(Point2 a, Point2 b, double reach, const GeoTransform& t, int w, int h,
                      F&& f) {
  double len = distance(a, b);
  if (len <= 0.0) return;
  double ux = (b.x - a.x) / len, uy = (b.y - a.y) / len;
  double nx = -uy, ny = ux;
  Point2 corners[4] = {{a.x - ux * reach + nx * reach, a.y - uy * reach + ny * reach},
                       {a.x - ux * reach - nx * reach, a.y - uy * reach - ny * reach},
                       {b.x + ux * reach - nx * reach, b.y + uy * reach - ny * reach},
                       {b.x + ux * reach + nx * reach, b.y + uy * reach + ny * reach}};
  double yLo = corners[0].y, yHi = corners[0].y;
  for (const Point2& c : corners) {
    yLo = std::min(yLo, c.y);
    yHi = std::max(yHi, c.y);
  }
  int rFirst = std::max(0, static_cast<int>(std::ceil(t.rowOf(yHi) - 0.5)));
  int rLast = std::min(h - 1, static_cast<int>(std::floor(t.rowOf(yLo) - 0.5)));
  for (int r = rFirst; r <= rLast; ++r) {
    double Y = t.pixelCenterY(r);
    double xMin = 0.0, xMax = 0.0;
    bool any = false;
    for (int e = 0; e < 4; ++e) {
      const Point2& p = corners[e];
      const Point2& q = corners[(e + 1) % 4];
      if (p.y == q.y) {
        if (p.y == Y) {
          xMin = any ? std::min({xMin, p.x, q.x}) : std::min(p.x, q.x);
          xMax = any ? std::max({xMax, p.x, q.x}) : std::max(p.x, q.x);
          any = true;
        }
        continue;
      }
      if ((p.y - Y) * (q.y - Y) > 0.0) continue;
      double x = p.x + (Y - p.y) * (q.x - p.x) / (q.y - p.y);
      xMin = any ? std::min(xMin, x) : x;
      xMax = any ? std::max(xMax, x) : x;
      any = true;
    }
    if (!any) continue;
    int cFirst = std::max(0, static_cast<int>(std::ceil(t.colOf(xMin) - 0.5)));
    int cLast = std::min(w - 1, static_cast<int>(std::floor(t.colOf(xMax) - 0.5)));
    for (int c = cFirst; c <= cLast; ++c) {
      double vx = t.pixelCenterX(c) - a.x, vy = Y - a.y;
      f(static_cast<std::size_t>(r) * w + c, vx * ux + vy * uy, vx * nx + vy * ny);
    }
  }
}

// Distance from the (along, perp) decomposition to the sub-segment of length
// len shifted sideways by offset.
double bandDistance(double along, double perp, double len, double offset) {
  double dAlong = std::max({0.0, -along, along - len});
  return std::hypot(dAlong, perp - offset);
}

bool outsideRaster(const Polyline& line, double reach, const GeoTransform& t, int w, int h) {
  BoundingBox bb = boundingBox(line, reach);
  return bb.maxX < t.originX || bb.minX > t.originX + w * t.pixelSize || bb.maxY > t.originY ||
         bb.minY < t.originY - h * t.pixelSize;
}

void setRgb(ByteRaster& rgb, std::size_t idx, Rgb color) {
  rgb.band(0)[idx] = color.r;
  rgb.band(1)[idx] = color.g;
  rgb.band(2)[idx] = color.b;
}

}  // namespace

ByteRaster rasterizeCenterlines(const RoadNetwork& network, double widthPx,
                                const GeoTransform& transform, int width, int height,
                                std::size_t* clippedSegments) {
  if (widthPx < 1.0) throw ConfigError("centerline width must be at least 1 px");
  double radius = widthPx * transform.pixelSize / 2.0;
  ByteRaster out(width, height, 1, BandSemantics::binaryMask, transform);
  auto px = out.band(0);
  std::size_t clipped = 0;
  for (const auto& [id, seg] : network.segments()) {
    if (outsideRaster(seg.line, radius, transform, width, height)) {
      ++clipped;
      continue;
    }
    for (std::size_t i = 1; i < seg.line.size(); ++i) {
      double len = distance(seg.line[i - 1], seg.line[i]);
      forEachBandPixel(seg.line[i - 1], seg.line[i], radius, transform, width, height,
                       [&](std::size_t idx, double along, double perp) {
                         if (bandDistance(along, perp, len, 0.0) <= radius) px[idx] = 1;
                       });
    }
  }
  if (clippedSegments) *clippedSegments = clipped;
  return out;
}

ByteRaster rasterizeClassLabels(const std::vector<std::pair<Polyline, RoadClass>>& lines,
                                double widthPx, const GeoTransform& transform, int width,
                                int height) {
  double radius = widthPx * transform.pixelSize / 2.0;
  ByteRaster out(width, height, 1, BandSemantics::classLabel, transform);
  auto px = out.band(0);
  for (const auto& [line, cls] : lines) {
    std::uint8_t value = static_cast<std::uint8_t>(cls.value());
    for (std::size_t i = 1; i < line.size(); ++i) {
      double len = distance(line[i - 1], line[i]);
      forEachBandPixel(line[i - 1], line[i], radius, transform, width, height,
                       [&](std::size_t idx, double along, double perp) {
                         if (bandDistance(along, perp, len, 0.0) <= radius)
                           px[idx] = std::max(px[idx], value);
                       });
    }
  }
  return out;
}

std::map<std::string, RoadClass> assignRandomClasses(const RoadNetwork& network,
                                                     std::uint64_t seed) {
  std::map<std::string, RoadClass> assignment;
  for (const auto& [id, seg] : network.segments()) {
    Rng rng(subSeed(seed, "class/" + id));
    assignment.emplace(id, RoadClass(static_cast<int>(rng.uniformInt(5)) + 1));
  }
  return assignment;
}

void paintCorridor(ByteRaster& rgb, const Polyline& line, double widthPx, Rgb color) {
  if (rgb.bandCount() != 3) throw DataError("paintCorridor: raster must be rgb");
  const GeoTransform& t = rgb.transform();
  double radius = widthPx * t.pixelSize / 2.0;
  for (std::size_t i = 1; i < line.size(); ++i) {
    double len = distance(line[i - 1], line[i]);
    forEachBandPixel(line[i - 1], line[i], radius, t, rgb.width(), rgb.height(),
                     [&](std::size_t idx, double along, double perp) {
                       if (bandDistance(along, perp, len, 0.0) <= radius) setRgb(rgb, idx, color);
                     });
  }
}

void strokeSymbol(ByteRaster& rgb, const Polyline& line, const ClassSymbol& symbol, Rgb color,
                  double dashPhaseM, double gapAdjustPx, double widthAdjustPx) {
  const GeoTransform& t = rgb.transform();
  double px = t.pixelSize;
  double strokeW = (symbol.strokeWidthPx + widthAdjustPx) * px;
  double gap = (symbol.gapPx + gapAdjustPx) * px;
  double onLen = symbol.dashOnPx * px;
  double offLen = symbol.dashOffPx * px;
  double period = onLen + offLen;

  double offsets[2] = {0.0, 0.0};
  bool lineDashed[2] = {symbol.dashed(), symbol.dashed()};
  int lines = symbol.lineCount;
  if (lines == 2) {
    offsets[0] = -(gap + strokeW) / 2.0;
    offsets[1] = (gap + strokeW) / 2.0;
    if (symbol.dashSecondLineOnly) lineDashed[0] = false;
  }
  double reach = std::abs(offsets[1]) + strokeW / 2.0;

  auto dashOn = [&](double s) {
    double m = std::fmod(s - dashPhaseM, period);
    if (m < 0.0) m += period;
    return m < onLen;
  };

  auto cum = cumulativeLengths(line);
  for (std::size_t i = 1; i < line.size(); ++i) {
    double len = cum[i] - cum[i - 1];
    double cumStart = cum[i - 1];
    forEachBandPixel(line[i - 1], line[i], reach, t, rgb.width(), rgb.height(),
                     [&](std::size_t idx, double along, double perp) {
                       for (int k = 0; k < lines; ++k) {
                         if (bandDistance(along, perp, len, offsets[k]) > strokeW / 2.0) continue;
                         if (lineDashed[k] && !dashOn(cumStart + std::clamp(along, 0.0, len)))
                           continue;
                         setRgb(rgb, idx, color);
                         break;
                       }
                     });
  }
}

ByteRaster paintSymbology(const ByteRaster& base, const RoadNetwork& network,
                          const std::map<std::string, RoadClass>& assignment,
                          const SymbologySpec& spec, std::uint64_t seed) {
  spec.validate();
  if (base.bandCount() != 3) throw DataError("paintSymbology: base raster must be rgb");
  ByteRaster out = base;
  const GeoTransform& t = out.transform();

  double overpaintRadius = spec.overpaintWidthPx * t.pixelSize / 2.0;
  for (const auto& [id, seg] : network.segments()) {
    for (std::size_t i = 1; i < seg.line.size(); ++i) {
      double len = distance(seg.line[i - 1], seg.line[i]);
      forEachBandPixel(seg.line[i - 1], seg.line[i], overpaintRadius, t, out.width(),
                       out.height(), [&](std::size_t idx, double along, double perp) {
                         if (bandDistance(along, perp, len, 0.0) <= overpaintRadius)
                           setRgb(out, idx, spec.background);
                       });
    }
  }

  for (const auto& [id, seg] : network.segments()) {
    auto it = assignment.find(id);
    if (it == assignment.end()) throw DataError("no class assigned to segment " + id);
    const ClassSymbol& sym = spec.classes[static_cast<std::size_t>(it->second.index())];
    Rng rng(subSeed(seed, "paint/" + id));
    // Fixed draw order keeps the stream stable whether or not a knob is used.
    double widthAdj = rng.uniformRange(-sym.widthJitterPx, sym.widthJitterPx);
    double gapAdj = rng.uniformRange(-sym.gapJitterPx, sym.gapJitterPx);
    double phase01 = rng.uniformReal();
    double period = (sym.dashOnPx + sym.dashOffPx) * t.pixelSize;
    double phase = sym.randomDashPhase ? phase01 * period : 0.0;
    strokeSymbol(out, seg.line, sym, spec.stroke, phase, gapAdj, widthAdj);
  }
  return out;
}

SyntheticTriplet buildSyntheticDataset(const ByteRaster& base, const RoadNetwork& network,
                                       const SymbologySpec& spec, std::uint64_t seed,
                                       double labelWidthPx, double regionWidthPx) {
  SyntheticTriplet triplet;
  triplet.seed = seed;
  triplet.assignment = assignRandomClasses(network, seed);
  triplet.map = paintSymbology(base, network, triplet.assignment, spec, seed);

  std::vector<std::pair<Polyline, RoadClass>> lines;
  for (const auto& [id, seg] : network.segments())
    lines.emplace_back(seg.line, triplet.assignment.at(id));
  triplet.labels = rasterizeClassLabels(lines, labelWidthPx, base.transform(), base.width(),
                                        base.height());
  triplet.regionMask =
      rasterizeCenterlines(network, regionWidthPx, base.transform(), base.width(), base.height());
  return triplet;
}

}  // namespace roadvec
