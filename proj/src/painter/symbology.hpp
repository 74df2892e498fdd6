#pragma once

#include <array>
#include <cstdint>

#include "core/error.hpp"

namespace roadvec {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

// Rendering recipe for one road class symbol. Lengths are in pixels of the
// target raster; the painter converts to meters with the raster pixel size.
struct ClassSymbol {
  int lineCount = 1;            // 1 = single stroke, 2 = parallel double stroke
  double strokeWidthPx = 1.0;   // width of each stroke
  double gapPx = 0.0;           // clear space between double strokes
  double dashOnPx = 0.0;        // 0/0 = solid
  double dashOffPx = 0.0;
  bool dashSecondLineOnly = false;  // double symbol with one dashed side
  double widthJitterPx = 0.0;       // per-segment uniform jitter ranges
  double gapJitterPx = 0.0;
  bool randomDashPhase = false;

  bool dashed() const { return dashOnPx > 0.0 || dashOffPx > 0.0; }
  // Widest extent the symbol can reach with maximal jitter.
  double maxRenderedWidthPx() const {
    double stroke = strokeWidthPx + widthJitterPx;
    if (lineCount == 2) return gapPx + gapJitterPx + 2.0 * stroke;
    return stroke;
  }
};

// The five class symbols plus shared paint parameters. Defaults approximate
// the historical sheet style: dashed or solid single lines for the narrow
// classes, widening double lines for the built-up ones.
struct SymbologySpec {
  std::array<ClassSymbol, 5> classes;  // index 0 = class 1
  Rgb background{247, 235, 205};       // sheet paper tone
  Rgb stroke{40, 36, 30};              // ink
  double overpaintWidthPx = 13.0;

  static SymbologySpec defaults();
  void validate() const;
};

}  // namespace roadvec
