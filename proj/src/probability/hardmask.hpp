#pragma once

#include "core/raster.hpp"

namespace roadvec {

// Forces certainty outside the buffered road region: there the no-road band
// becomes 1 and the class bands 0. Inside, the no-road band becomes 0 and the
// five class bands are rescaled to sum to 1, which cannot change the per-pixel
// class argmax. roadRegion uses 1 = road. Idempotent.
ProbabilityField applyHardMask(const ProbabilityField& field, const ByteRaster& roadRegion);

// Certainty-one field from a class-label raster: label 0 lights the no-road
// band, label k lights class band k-1. The usual truth oracle in tests.
ProbabilityField oneHotFromLabels(const ByteRaster& labels);

}  // namespace roadvec
