#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/geo.hpp"

namespace roadvec {

enum class BandSemantics { gray, rgb, binaryMask, classLabel, probability };

const char* bandSemanticsName(BandSemantics s);
int expectedBandCount(BandSemantics s);  // 0 = unconstrained

// Georeferenced pixel grid with one or more planar bands, row-major, row 0 at
// the top. Immutable by convention once handed to a pipeline stage.
template <typename T>
class Raster {
 public:
  Raster() = default;
  Raster(int width, int height, int bandCount, BandSemantics semantics,
         GeoTransform transform = {}, T fill = T{})
      : width_(width), height_(height), semantics_(semantics), transform_(transform) {
    if (width <= 0 || height <= 0 || bandCount <= 0)
      throw DataError("raster dimensions must be positive");
    bands_.assign(static_cast<std::size_t>(bandCount),
                  std::vector<T>(static_cast<std::size_t>(width) * height, fill));
  }

  int width() const { return width_; }
  int height() const { return height_; }
  int bandCount() const { return static_cast<int>(bands_.size()); }
  std::size_t pixelCount() const { return static_cast<std::size_t>(width_) * height_; }
  BandSemantics semantics() const { return semantics_; }
  const GeoTransform& transform() const { return transform_; }
  void setTransform(const GeoTransform& t) { transform_ = t; }
  void setSemantics(BandSemantics s) { semantics_ = s; }

  std::span<T> band(int b) { return bands_[static_cast<std::size_t>(b)]; }
  std::span<const T> band(int b) const { return bands_[static_cast<std::size_t>(b)]; }

  T at(int b, int row, int col) const {
    return bands_[static_cast<std::size_t>(b)][static_cast<std::size_t>(row) * width_ + col];
  }
  T& at(int b, int row, int col) {
    return bands_[static_cast<std::size_t>(b)][static_cast<std::size_t>(row) * width_ + col];
  }

  bool sameGrid(const Raster& o, double tol = 1e-9) const {
    return width_ == o.width_ && height_ == o.height_ && transform_.almostEqual(o.transform_, tol);
  }

  friend bool operator==(const Raster& a, const Raster& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ && a.semantics_ == b.semantics_ &&
           a.transform_.almostEqual(b.transform_) && a.bands_ == b.bands_;
  }

 private:
  int width_ = 0;
  int height_ = 0;
  BandSemantics semantics_ = BandSemantics::gray;
  GeoTransform transform_;
  std::vector<std::vector<T>> bands_;
};

using ByteRaster = Raster<std::uint8_t>;
using FloatRaster = Raster<float>;

// Grid equality across value types (a mask against a probability field, say).
template <typename A, typename B>
bool sameGrid(const Raster<A>& a, const Raster<B>& b, double tol = 1e-9) {
  return a.width() == b.width() && a.height() == b.height() &&
         a.transform().almostEqual(b.transform(), tol);
}

// Throws DataError when band values violate the declared semantics
// (binary masks must be {0,1}, class labels must be 0..5).
void validateSemantics(const ByteRaster& raster);

inline constexpr int kRoadClassCount = 5;
inline constexpr int kProbabilityBands = 6;  // class 1..5, then no-road

// Per-pixel categorical distribution over the five road classes plus no-road,
// band order (class1..class5, noRoad).
class ProbabilityField {
 public:
  ProbabilityField() = default;
  explicit ProbabilityField(FloatRaster raster);
  ProbabilityField(int width, int height, GeoTransform transform);

  const FloatRaster& raster() const { return raster_; }
  FloatRaster& raster() { return raster_; }
  int width() const { return raster_.width(); }
  int height() const { return raster_.height(); }
  const GeoTransform& transform() const { return raster_.transform(); }
  std::size_t pixelCount() const { return raster_.pixelCount(); }

  std::span<float> band(int b) { return raster_.band(b); }
  std::span<const float> band(int b) const { return raster_.band(b); }

  // Verifies values in [0,1] and per-pixel band sums within tol of 1; throws
  // DataError naming the first offending pixel.
  void validate(double tol = 1e-5) const;

  // Index 0..4 = class 1..5, 5 = no-road; ties resolved to the lowest index.
  int argmaxAt(std::size_t pixel) const;

 private:
  FloatRaster raster_;
};

}  // namespace roadvec
