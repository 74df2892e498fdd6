#include "io/probfield_io.hpp"

#include <bit>
#include <fstream>

#include <nlohmann/json.hpp>

namespace roadvec {

static_assert(std::endian::native == std::endian::little,
              "probf payload is little-endian; big-endian hosts are unsupported");

namespace {

using json = nlohmann::ordered_json;

const std::array<std::string, kProbabilityBands> kBandOrder = {
    "class1", "class2", "class3", "class4", "class5", "no_road"};

}  // namespace

ProbabilityField readProbabilityField(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::string headerLine;
  if (!std::getline(in, headerLine)) throw DataError(path.string() + ": missing header line");

  json header;
  try {
    header = json::parse(headerLine);
  } catch (const json::exception& e) {
    throw DataError(path.string() + ": bad header: " + e.what());
  }

  int width = header.at("width").get<int>();
  int height = header.at("height").get<int>();
  int bands = header.at("bands").get<int>();
  if (bands != kProbabilityBands)
    throw DataError(path.string() + ": expected " + std::to_string(kProbabilityBands) +
                    " bands, header declares " + std::to_string(bands));
  if (header.contains("band_order")) {
    auto order = header.at("band_order").get<std::vector<std::string>>();
    for (int b = 0; b < kProbabilityBands; ++b)
      if (order.size() != kBandOrder.size() || order[b] != kBandOrder[b])
        throw DataError(path.string() + ": unexpected band order");
  }
  GeoTransform t;
  t.pixelSize = header.at("pixel_size").get<double>();
  t.originX = header.at("origin_x").get<double>();
  t.originY = header.at("origin_y").get<double>();

  ProbabilityField field(width, height, t);
  std::size_t n = field.pixelCount();
  for (int b = 0; b < kProbabilityBands; ++b) {
    in.read(reinterpret_cast<char*>(field.band(b).data()),
            static_cast<std::streamsize>(n * sizeof(float)));
    if (static_cast<std::size_t>(in.gcount()) != n * sizeof(float))
      throw DataError(path.string() + ": truncated payload in band " + std::to_string(b));
  }
  field.validate(1e-4);
  return field;
}

void writeProbabilityField(const std::filesystem::path& path, const ProbabilityField& field) {
  json header;
  header["width"] = field.width();
  header["height"] = field.height();
  header["bands"] = kProbabilityBands;
  header["band_order"] = kBandOrder;
  header["pixel_size"] = field.transform().pixelSize;
  header["origin_x"] = field.transform().originX;
  header["origin_y"] = field.transform().originY;

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out << header.dump() << "\n";
  std::size_t n = field.pixelCount();
  for (int b = 0; b < kProbabilityBands; ++b)
    out.write(reinterpret_cast<const char*>(field.band(b).data()),
              static_cast<std::streamsize>(n * sizeof(float)));
  if (!out) throw DataError("failed writing payload to " + path.string());
}

}  // namespace roadvec
