#include "io/geojson_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace roadvec {

namespace {

using json = nlohmann::ordered_json;

json lineStringGeometry(const Polyline& line) {
  json coords = json::array();
  for (const Point2& p : line) coords.push_back(json::array({p.x, p.y}));
  return json{{"type", "LineString"}, {"coordinates", coords}};
}

Polyline parseLineString(const json& geometry, const std::string& featureId) {
  if (geometry.value("type", "") != "LineString")
    throw DataError("feature " + featureId + ": only LineString geometries are supported, got " +
                    geometry.value("type", "<missing>"));
  Polyline line;
  for (const auto& coord : geometry.at("coordinates")) {
    if (!coord.is_array() || coord.size() < 2)
      throw DataError("feature " + featureId + ": malformed coordinate");
    line.push_back({coord[0].get<double>(), coord[1].get<double>()});
  }
  if (!isValidPolyline(line))
    throw DataError("feature " + featureId + ": invalid polyline geometry");
  return line;
}

json readCollection(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw DataError(path.string() + ": bad JSON: " + e.what());
  }
  if (doc.value("type", "") != "FeatureCollection")
    throw DataError(path.string() + ": not a FeatureCollection");
  return doc;
}

void writeCollection(const std::filesystem::path& path, json features,
                     std::optional<int> crsEpsg) {
  json doc;
  doc["type"] = "FeatureCollection";
  if (crsEpsg) doc["crs_epsg"] = *crsEpsg;
  doc["features"] = std::move(features);
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out << doc.dump(2) << "\n";
}

std::string featureIdOf(const json& feature, std::size_t index) {
  if (feature.contains("properties") && feature["properties"].contains("segment_id"))
    return feature["properties"]["segment_id"].get<std::string>();
  return "feature[" + std::to_string(index) + "]";
}

}  // namespace

void writeNetwork(const std::filesystem::path& path, const RoadNetwork& network,
                  std::optional<int> crsEpsg) {
  json features = json::array();
  for (const auto& [id, seg] : network.segments()) {
    json f;
    f["type"] = "Feature";
    f["properties"] = json{{"segment_id", id}};
    f["geometry"] = lineStringGeometry(seg.line);
    features.push_back(std::move(f));
  }
  writeCollection(path, std::move(features), crsEpsg);
}

RoadNetwork readNetwork(const std::filesystem::path& path) {
  json doc = readCollection(path);
  RoadNetwork network;
  std::size_t index = 0;
  for (const auto& feature : doc.at("features")) {
    std::string id = featureIdOf(feature, index);
    network.addSegment(id, parseLineString(feature.at("geometry"), id));
    ++index;
  }
  return network;
}

void writeClassifiedNetwork(const std::filesystem::path& path, const ClassifiedNetwork& network,
                            std::optional<int> crsEpsg) {
  json features = json::array();
  for (const auto& [id, sec] : network.sections()) {
    json props;
    props["segment_id"] = id;
    props["road_class"] = sec.roadClass.value();
    if (!sec.parentSegment.empty()) props["parent_id"] = sec.parentSegment;
    if (sec.meanProbs) props["mean_probs"] = *sec.meanProbs;
    json f;
    f["type"] = "Feature";
    f["properties"] = std::move(props);
    f["geometry"] = lineStringGeometry(sec.line);
    features.push_back(std::move(f));
  }
  writeCollection(path, std::move(features), crsEpsg);
}

ClassifiedNetwork readClassifiedNetwork(const std::filesystem::path& path) {
  json doc = readCollection(path);
  ClassifiedNetwork network;
  std::size_t index = 0;
  for (const auto& feature : doc.at("features")) {
    std::string id = featureIdOf(feature, index);
    const json& props = feature.at("properties");
    if (!props.contains("road_class") || !props["road_class"].is_number_integer())
      throw DataError("feature " + id + ": missing integer road_class");
    Section sec;
    sec.roadClass = RoadClass(props["road_class"].get<int>());
    sec.line = parseLineString(feature.at("geometry"), id);
    if (props.contains("parent_id")) sec.parentSegment = props["parent_id"].get<std::string>();
    if (props.contains("mean_probs")) {
      auto v = props["mean_probs"].get<std::vector<double>>();
      if (v.size() != 5) throw DataError("feature " + id + ": mean_probs must have 5 entries");
      std::array<double, 5> arr;
      std::copy(v.begin(), v.end(), arr.begin());
      sec.meanProbs = arr;
    }
    if (!network.sections().emplace(id, std::move(sec)).second)
      throw DataError("duplicate section id " + id);
    ++index;
  }
  return network;
}

}  // namespace roadvec
