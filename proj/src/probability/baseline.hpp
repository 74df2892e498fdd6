#pragma once

#include "core/raster.hpp"
#include "painter/symbology.hpp"

namespace roadvec {

// Knobs of the template-correlation classifier.
struct BaselineParams {
  double temperature = 0.1;     // softmax sharpness applied to match scores
  int windowSize = 0;           // odd template size; 0 = cover the widest symbol
  double rotationStepDeg = 15;  // template orientations sampled over 180 degrees
  int dashPhaseVariants = 3;    // dash alignments sampled per dashed class
  int displacementRadius = 5;   // px of local best-response pooling

  void validate() const;
};

// Non-learned per-pixel classifier: normalized cross-correlation of the local
// window against rotation- and dash-phase-sampled renderings of each class
// symbol, pooled over small displacements, then softmax over the five class
// scores. The no-road band is left at 0 for applyHardMask to fill in.
//
// roi, when given, restricts scoring to pixels of the mask (grown by the
// pooling radius); everything else gets the uniform class distribution. The
// road-region pixels are the only ones that survive hard masking, so skipping
// the rest changes nothing downstream and makes full sheets tractable.
ProbabilityField baselineClassifier(const ByteRaster& map, const SymbologySpec& spec,
                                    const BaselineParams& params = {},
                                    const ByteRaster* roi = nullptr);

}  // namespace roadvec
