#pragma once

#include <filesystem>

#include "core/raster.hpp"

namespace roadvec {

// Rasters travel as 8-bit PNG (gray or RGB) plus a 6-line ESRI world file
// (.pgw written, .pgw or .wld accepted). World files reference the center of
// the top-left pixel; in memory the transform origin is the top-left corner.

GeoTransform readWorldFile(const std::filesystem::path& path);
void writeWorldFile(const std::filesystem::path& path, const GeoTransform& t);

std::filesystem::path worldFilePathFor(const std::filesystem::path& pngPath);

// Reads image + sidecar world file. Semantics come back as gray or rgb from
// the channel count; callers expecting masks or labels re-tag and validate.
ByteRaster readRaster(const std::filesystem::path& pngPath);
void writeRaster(const std::filesystem::path& pngPath, const ByteRaster& raster);

}  // namespace roadvec
