#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "core/raster.hpp"

namespace roadvec {

// Splits a sheet into overlapping fixed-size tiles and reassembles
// predictions by cropping each tile to its central stride*stride window.
// stitchTiles(makeTiles(r)) == r bit-exactly.

inline constexpr int kDefaultTileSize = 500;
inline constexpr int kDefaultTileOverlap = 125;

// Folds an out-of-range index back into [0, n) by mirroring at the edges
// (edge-inclusive, so -1 -> 0 and n -> n-1), repeatedly for far overshoots.
inline int reflectIndex(int i, int n) {
  if (n == 1) return 0;
  int period = 2 * n;
  int m = i % period;
  if (m < 0) m += period;
  return m < n ? m : period - 1 - m;
}

template <typename T>
struct TileGrid {
  int tileSize = kDefaultTileSize;
  int overlap = kDefaultTileOverlap;
  int sourceWidth = 0;
  int sourceHeight = 0;
  GeoTransform sourceTransform;

  struct Tile {
    int row = 0;
    int col = 0;
    Raster<T> raster;
  };
  std::vector<Tile> tiles;  // row-major by (row, col)

  int stride() const { return tileSize - 2 * overlap; }
  int rowCount() const { return (sourceHeight + stride() - 1) / stride(); }
  int colCount() const { return (sourceWidth + stride() - 1) / stride(); }
};

template <typename T>
TileGrid<T> makeTiles(const Raster<T>& source, int tileSize = kDefaultTileSize,
                      int overlap = kDefaultTileOverlap) {
  if (tileSize <= 2 * overlap)
    throw ConfigError("tile size must exceed twice the overlap");
  TileGrid<T> grid;
  grid.tileSize = tileSize;
  grid.overlap = overlap;
  grid.sourceWidth = source.width();
  grid.sourceHeight = source.height();
  grid.sourceTransform = source.transform();
  int stride = grid.stride();
  if (source.width() < stride || source.height() < stride)
    throw DataError("raster " + std::to_string(source.width()) + "x" +
                    std::to_string(source.height()) + " is smaller than the tile stride " +
                    std::to_string(stride));

  double px = source.transform().pixelSize;
  for (int r = 0; r < grid.rowCount(); ++r) {
    for (int c = 0; c < grid.colCount(); ++c) {
      int x0 = c * stride - overlap;
      int y0 = r * stride - overlap;
      GeoTransform t = source.transform();
      t.originX += x0 * px;
      t.originY -= y0 * px;
      Raster<T> tile(tileSize, tileSize, source.bandCount(), source.semantics(), t);
      for (int b = 0; b < source.bandCount(); ++b) {
        auto src = source.band(b);
        auto dst = tile.band(b);
        for (int ty = 0; ty < tileSize; ++ty) {
          int sy = reflectIndex(y0 + ty, source.height());
          const T* srow = src.data() + static_cast<std::size_t>(sy) * source.width();
          T* drow = dst.data() + static_cast<std::size_t>(ty) * tileSize;
          for (int tx = 0; tx < tileSize; ++tx)
            drow[tx] = srow[reflectIndex(x0 + tx, source.width())];
        }
      }
      grid.tiles.push_back({r, c, std::move(tile)});
    }
  }
  return grid;
}

template <typename T>
Raster<T> stitchTiles(const TileGrid<T>& grid) {
  if (grid.tiles.empty()) throw DataError("tile grid is empty");
  std::size_t expected = static_cast<std::size_t>(grid.rowCount()) * grid.colCount();
  if (grid.tiles.size() != expected)
    throw DataError("tile grid has " + std::to_string(grid.tiles.size()) + " tiles, expected " +
                    std::to_string(expected));
  int bands = grid.tiles.front().raster.bandCount();
  Raster<T> out(grid.sourceWidth, grid.sourceHeight, bands,
                grid.tiles.front().raster.semantics(), grid.sourceTransform);
  int stride = grid.stride();
  std::vector<bool> placed(expected, false);
  for (const auto& tile : grid.tiles) {
    if (tile.raster.width() != grid.tileSize || tile.raster.height() != grid.tileSize)
      throw DataError("tile (" + std::to_string(tile.row) + "," + std::to_string(tile.col) +
                      ") is " + std::to_string(tile.raster.width()) + "x" +
                      std::to_string(tile.raster.height()) + ", expected " +
                      std::to_string(grid.tileSize) + " square");
    if (tile.raster.bandCount() != bands) throw DataError("tiles disagree on band count");
    if (tile.row < 0 || tile.row >= grid.rowCount() || tile.col < 0 ||
        tile.col >= grid.colCount())
      throw DataError("tile position out of grid range");
    placed[static_cast<std::size_t>(tile.row) * grid.colCount() + tile.col] = true;
    int destX0 = tile.col * stride;
    int destY0 = tile.row * stride;
    int copyW = std::min(stride, grid.sourceWidth - destX0);
    int copyH = std::min(stride, grid.sourceHeight - destY0);
    for (int b = 0; b < bands; ++b) {
      auto src = tile.raster.band(b);
      auto dst = out.band(b);
      for (int y = 0; y < copyH; ++y) {
        const T* srow = src.data() +
                        static_cast<std::size_t>(grid.overlap + y) * grid.tileSize + grid.overlap;
        T* drow = dst.data() + static_cast<std::size_t>(destY0 + y) * grid.sourceWidth + destX0;
        for (int x = 0; x < copyW; ++x) drow[x] = srow[x];
      }
    }
  }
  for (std::size_t i = 0; i < expected; ++i)
    if (!placed[i])
      throw DataError("missing tile (" + std::to_string(i / grid.colCount()) + "," +
                      std::to_string(i % grid.colCount()) + ")");
  return out;
}

}  // namespace roadvec
