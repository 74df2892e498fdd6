#include "io/raster_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace roadvec {

namespace fs = std::filesystem;

GeoTransform readWorldFile(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open world file " + path.string());
  double lines[6];
  for (double& v : lines)
    if (!(in >> v)) throw DataError("world file " + path.string() + " needs 6 numeric lines");
  double a = lines[0], d = lines[1], b = lines[2], e = lines[3];
  double cx = lines[4], cy = lines[5];
  if (d != 0.0 || b != 0.0)
    throw DataError("world file " + path.string() + " has rotation terms; only axis-aligned grids are supported");
  if (!(a > 0.0) || !(e < 0.0))
    throw DataError("world file " + path.string() + " must have positive x and negative y pixel size");
  if (std::abs(a + e) > 1e-12)
    throw DataError("world file " + path.string() + " has non-square pixels");
  GeoTransform t;
  t.pixelSize = a;
  // The world file stores the center of the top-left pixel.
  t.originX = cx - 0.5 * a;
  t.originY = cy + 0.5 * a;
  return t;
}

void writeWorldFile(const fs::path& path, const GeoTransform& t) {
  std::ostringstream out;
  out.precision(17);
  out << t.pixelSize << "\n0\n0\n" << -t.pixelSize << "\n"
      << t.originX + 0.5 * t.pixelSize << "\n" << t.originY - 0.5 * t.pixelSize << "\n";
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw DataError("cannot write world file " + path.string());
  f << out.str();
}

fs::path worldFilePathFor(const fs::path& pngPath) {
  fs::path p = pngPath;
  return p.replace_extension(".pgw");
}

namespace {

fs::path findWorldFile(const fs::path& pngPath) {
  fs::path pgw = pngPath;
  pgw.replace_extension(".pgw");
  if (fs::exists(pgw)) return pgw;
  fs::path wld = pngPath;
  wld.replace_extension(".wld");
  if (fs::exists(wld)) return wld;
  throw DataError("no world file (.pgw or .wld) next to " + pngPath.string());
}

struct PngReader {
  png_structp png = nullptr;
  png_infop info = nullptr;
  std::FILE* file = nullptr;
  ~PngReader() {
    if (png) png_destroy_read_struct(&png, &info, nullptr);
    if (file) std::fclose(file);
  }
};

struct PngWriter {
  png_structp png = nullptr;
  png_infop info = nullptr;
  std::FILE* file = nullptr;
  ~PngWriter() {
    if (png) png_destroy_write_struct(&png, &info);
    if (file) std::fclose(file);
  }
};

}  // namespace

ByteRaster readRaster(const fs::path& pngPath) {
  GeoTransform transform = readWorldFile(findWorldFile(pngPath));

  PngReader r;
  r.file = std::fopen(pngPath.string().c_str(), "rb");
  if (!r.file) throw DataError("cannot open " + pngPath.string());
  r.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  r.info = png_create_info_struct(r.png);
  if (!r.png || !r.info) throw DataError("libpng initialization failed");
  if (setjmp(png_jmpbuf(r.png))) throw DataError("failed to decode " + pngPath.string());

  png_init_io(r.png, r.file);
  png_read_info(r.png, r.info);
  // Normalize everything to 8-bit gray or RGB.
  png_set_strip_16(r.png);
  png_set_strip_alpha(r.png);
  png_set_packing(r.png);
  if (png_get_color_type(r.png, r.info) == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(r.png);
  if (png_get_color_type(r.png, r.info) == PNG_COLOR_TYPE_GRAY &&
      png_get_bit_depth(r.png, r.info) < 8)
    png_set_expand_gray_1_2_4_to_8(r.png);
  png_read_update_info(r.png, r.info);

  int width = static_cast<int>(png_get_image_width(r.png, r.info));
  int height = static_cast<int>(png_get_image_height(r.png, r.info));
  int channels = png_get_channels(r.png, r.info);
  if (channels != 1 && channels != 3)
    throw DataError(pngPath.string() + ": expected 1 or 3 channels, got " +
                    std::to_string(channels));

  std::vector<std::uint8_t> row(static_cast<std::size_t>(width) * channels);
  ByteRaster raster(width, height, channels,
                    channels == 1 ? BandSemantics::gray : BandSemantics::rgb, transform);
  for (int y = 0; y < height; ++y) {
    png_read_row(r.png, row.data(), nullptr);
    for (int b = 0; b < channels; ++b) {
      auto band = raster.band(b);
      for (int x = 0; x < width; ++x)
        band[static_cast<std::size_t>(y) * width + x] = row[std::size_t(x) * channels + b];
    }
  }
  png_read_end(r.png, nullptr);
  return raster;
}

void writeRaster(const fs::path& pngPath, const ByteRaster& raster) {
  int channels = raster.bandCount();
  if (channels != 1 && channels != 3)
    throw DataError("PNG output supports 1 or 3 bands, raster has " + std::to_string(channels));

  PngWriter w;
  w.file = std::fopen(pngPath.string().c_str(), "wb");
  if (!w.file) throw DataError("cannot write " + pngPath.string());
  w.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  w.info = png_create_info_struct(w.png);
  if (!w.png || !w.info) throw DataError("libpng initialization failed");
  if (setjmp(png_jmpbuf(w.png))) throw DataError("failed to encode " + pngPath.string());

  png_init_io(w.png, w.file);
  png_set_IHDR(w.png, w.info, raster.width(), raster.height(), 8,
               channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(w.png, w.info);

  int width = raster.width();
  std::vector<std::uint8_t> row(static_cast<std::size_t>(width) * channels);
  for (int y = 0; y < raster.height(); ++y) {
    for (int b = 0; b < channels; ++b) {
      auto band = raster.band(b);
      for (int x = 0; x < width; ++x)
        row[std::size_t(x) * channels + b] = band[static_cast<std::size_t>(y) * width + x];
    }
    png_write_row(w.png, row.data());
  }
  png_write_end(w.png, nullptr);

  writeWorldFile(worldFilePathFor(pngPath), raster.transform());
}

}  // namespace roadvec
