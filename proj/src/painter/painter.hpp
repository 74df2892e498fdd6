#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "core/network.hpp"
#include "core/raster.hpp"
#include "painter/symbology.hpp"

namespace roadvec {

// Synthetic data factory: renders road networks back onto map rasters with
// class symbology and emits the matching label and region rasters. Everything
// here is deterministic under (inputs, seed); per-segment randomness uses
// sub-seeds derived from the segment id so map iteration order never matters.

struct SyntheticTriplet {
  ByteRaster map;         // rgb synthetic sheet
  ByteRaster labels;      // 0 = background, 1..5 = painted class corridor
  ByteRaster regionMask;  // 1 = within the buffered road region
  std::map<std::string, RoadClass> assignment;
  std::uint64_t seed = 0;
};

// Binary raster of all pixels whose center lies within widthPx*pixelSize/2 of
// any segment (round caps and joins). Segments fully outside the raster are
// counted into *clippedSegments when given.
ByteRaster rasterizeCenterlines(const RoadNetwork& network, double widthPx,
                                const GeoTransform& transform, int width, int height,
                                std::size_t* clippedSegments = nullptr);

// Per-pixel class corridor raster; overlaps resolved to the higher class id.
ByteRaster rasterizeClassLabels(const std::vector<std::pair<Polyline, RoadClass>>& lines,
                                double widthPx, const GeoTransform& transform, int width,
                                int height);

// Independent uniform class draw per segment, stable under map ordering.
std::map<std::string, RoadClass> assignRandomClasses(const RoadNetwork& network,
                                                     std::uint64_t seed);

// Paints every pixel within widthPx*pixelSize/2 of the polyline. Used for
// coordinate-grid lines and rendering overlays.
void paintCorridor(ByteRaster& rgb, const Polyline& line, double widthPx, Rgb color);

// One stroke pass of a symbol along a polyline (no background overpaint).
// gapAdjustPx/widthAdjustPx are pre-drawn jitter values; dashPhaseM offsets
// the dash pattern along the arc length.
void strokeSymbol(ByteRaster& rgb, const Polyline& line, const ClassSymbol& symbol, Rgb color,
                  double dashPhaseM, double gapAdjustPx = 0.0, double widthAdjustPx = 0.0);

// Overpaints every segment corridor with the background fill, then strokes
// each segment's class symbol with per-segment jitter. Pixels farther than
// overpaintWidthPx/2 from all segments are untouched.
ByteRaster paintSymbology(const ByteRaster& base, const RoadNetwork& network,
                          const std::map<std::string, RoadClass>& assignment,
                          const SymbologySpec& spec, std::uint64_t seed);

SyntheticTriplet buildSyntheticDataset(const ByteRaster& base, const RoadNetwork& network,
                                       const SymbologySpec& spec, std::uint64_t seed,
                                       double labelWidthPx = 13.0, double regionWidthPx = 10.0);

}  // namespace roadvec
