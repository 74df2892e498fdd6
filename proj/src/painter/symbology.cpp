#include "painter/symbology.hpp"

#include <string>

namespace roadvec {

SymbologySpec SymbologySpec::defaults() {
  SymbologySpec spec;
  auto& c = spec.classes;
  c[0] = {.lineCount = 1, .strokeWidthPx = 1.0, .dashOnPx = 6.0, .dashOffPx = 4.0,
          .randomDashPhase = true};
  c[1] = {.lineCount = 1, .strokeWidthPx = 1.0};
  c[2] = {.lineCount = 2, .strokeWidthPx = 1.0, .gapPx = 3.0, .dashOnPx = 6.0, .dashOffPx = 4.0,
          .dashSecondLineOnly = true, .gapJitterPx = 1.0, .randomDashPhase = true};
  c[3] = {.lineCount = 2, .strokeWidthPx = 1.0, .gapPx = 4.0, .gapJitterPx = 1.0};
  c[4] = {.lineCount = 2, .strokeWidthPx = 1.0, .gapPx = 6.0, .gapJitterPx = 1.0};
  return spec;
}

void SymbologySpec::validate() const {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const ClassSymbol& sym = classes[i];
    std::string who = "class " + std::to_string(i + 1) + " symbol: ";
    if (sym.lineCount != 1 && sym.lineCount != 2)
      throw ConfigError(who + "line count must be 1 or 2");
    if (sym.strokeWidthPx <= 0.0) throw ConfigError(who + "stroke width must be positive");
    if (sym.dashed() && (sym.dashOnPx <= 0.0 || sym.dashOffPx <= 0.0))
      throw ConfigError(who + "dash on/off lengths must both be positive");
    if (sym.lineCount == 2 && sym.gapPx <= 0.0)
      throw ConfigError(who + "double lines need a positive gap");
    if (sym.maxRenderedWidthPx() > overpaintWidthPx)
      throw ConfigError(who + "symbol wider than the overpaint corridor");
  }
}

}  // namespace roadvec
