#pragma once

#include <cstdint>
#include <string>

#include "assignment/assignment.hpp"
#include "painter/symbology.hpp"
#include "probability/baseline.hpp"

namespace roadvec {

// Knobs of the synthetic fixture generator.
struct SyntheticParams {
  int width = 2000;
  int height = 2000;
  double originX = 600000.0;  // LV03 false easting, keeps fixtures plausible
  double originY = 200000.0;
  double pixelSize = 1.25;
  int segmentCount = 30;
  double minLength = 100.0;
  double maxLength = 1000.0;
  double margin = 50.0;         // keep-out from the sheet border, m
  double minSeparation = 25.0;  // between generated roads, m
  double axisAvoidDeg = 5.0;    // no road this close to horizontal/vertical
  double labelFlipRate = 0.0;   // per-pixel noise on the oracle field
  double maskNoiseRate = 0.002; // per-pixel flips on the synthetic road mask
  int ensembleMembers = 1;
  double memberNoise = 0.25;    // perturbation strength of synthetic members
  bool paintGrid = true;        // draw the km coordinate grid on the sheet
};

// Every tunable of the pipeline, loadable from one JSON file. Unknown keys
// are rejected; missing keys keep their defaults; emit -> load -> emit is an
// identity on the text.
struct PipelineConfig {
  std::uint64_t seed = 20260816;
  int epsg = 21781;

  int tileSize = 500;
  int tileOverlap = 125;

  std::size_t minArea = 100;  // components below this many pixels are dropped

  double simplifyEpsilon = 1.9;  // m
  double minSpurLength = 30.0;   // m, junction twigs below this are pruned

  bool gridFilterEnabled = true;
  double gridSpacing = 1000.0;      // m between coordinate grid lines
  double gridBuffer = 3.75;         // m, vertex distance to the grid coordinate
  double gridNetTolerance = 2.5;    // m, max endpoint drift across the axis

  SymbologySpec symbology = SymbologySpec::defaults();
  double labelWidthPx = 13.0;   // width of the class-label corridor
  double regionWidthPx = 10.0;  // width of the road-region corridor

  BaselineParams baseline;
  AssignmentParams assignment;

  double evalBuffer = 5.0;      // m
  double evalSampleStep = 0.25; // m

  SyntheticParams synthetic;

  void validate() const;

  static PipelineConfig fromJsonText(const std::string& text);
  static PipelineConfig load(const std::string& path);
  std::string toJsonText() const;
  void save(const std::string& path) const;

  // Hash of the canonical JSON text, for manifest entries.
  std::string hashHex() const;
};

}  // namespace roadvec
