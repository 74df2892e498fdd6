#pragma once

#include <filesystem>

#include "core/raster.hpp"

namespace roadvec {

// ".probf" container: one line of JSON (width, height, bands, band_order,
// pixel_size, origin_x, origin_y) followed by raw little-endian float32
// payload, band-sequential. Round trips are bit-exact. Reads revalidate the
// per-pixel sum invariant at 1e-4 and reject out-of-range values.

ProbabilityField readProbabilityField(const std::filesystem::path& path);
void writeProbabilityField(const std::filesystem::path& path, const ProbabilityField& field);

}  // namespace roadvec
