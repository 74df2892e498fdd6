#include "pipeline/config.hpp"

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <nlohmann/json.hpp>

#include "core/rng.hpp"

namespace roadvec {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError("config: " + where + ": " + what);
}

void expectKeys(const json& obj, const std::string& where,
                std::initializer_list<const char*> keys) {
  if (!obj.is_object()) fail(where, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* k : keys)
      if (key == k) known = true;
    if (!known) fail(where, "unknown key \"" + key + "\"");
  }
}

void readNum(const json& obj, const std::string& where, const char* key, double& out) {
  if (!obj.contains(key)) return;
  if (!obj[key].is_number()) fail(where + "." + key, "expected a number");
  out = obj[key].get<double>();
}

void readInt(const json& obj, const std::string& where, const char* key, int& out) {
  if (!obj.contains(key)) return;
  if (!obj[key].is_number_integer()) fail(where + "." + key, "expected an integer");
  out = obj[key].get<int>();
}

void readBool(const json& obj, const std::string& where, const char* key, bool& out) {
  if (!obj.contains(key)) return;
  if (!obj[key].is_boolean()) fail(where + "." + key, "expected a boolean");
  out = obj[key].get<bool>();
}

void readColor(const json& obj, const std::string& where, const char* key, Rgb& out) {
  if (!obj.contains(key)) return;
  const json& arr = obj[key];
  if (!arr.is_array() || arr.size() != 3) fail(where + "." + key, "expected [r, g, b]");
  int rgb[3];
  for (int i = 0; i < 3; ++i) {
    if (!arr[i].is_number_integer() || arr[i].get<int>() < 0 || arr[i].get<int>() > 255)
      fail(where + "." + key, "channel values must be integers in 0..255");
    rgb[i] = arr[i].get<int>();
  }
  out = Rgb{static_cast<std::uint8_t>(rgb[0]), static_cast<std::uint8_t>(rgb[1]),
            static_cast<std::uint8_t>(rgb[2])};
}

json colorJson(Rgb c) { return json::array({c.r, c.g, c.b}); }

json symbolJson(const ClassSymbol& s) {
  return json{{"line_count", s.lineCount},
              {"stroke_width_px", s.strokeWidthPx},
              {"gap_px", s.gapPx},
              {"dash_on_px", s.dashOnPx},
              {"dash_off_px", s.dashOffPx},
              {"dash_second_line_only", s.dashSecondLineOnly},
              {"width_jitter_px", s.widthJitterPx},
              {"gap_jitter_px", s.gapJitterPx},
              {"random_dash_phase", s.randomDashPhase}};
}

void readSymbol(const json& obj, const std::string& where, ClassSymbol& s) {
  expectKeys(obj, where,
             {"line_count", "stroke_width_px", "gap_px", "dash_on_px", "dash_off_px",
              "dash_second_line_only", "width_jitter_px", "gap_jitter_px", "random_dash_phase"});
  readInt(obj, where, "line_count", s.lineCount);
  readNum(obj, where, "stroke_width_px", s.strokeWidthPx);
  readNum(obj, where, "gap_px", s.gapPx);
  readNum(obj, where, "dash_on_px", s.dashOnPx);
  readNum(obj, where, "dash_off_px", s.dashOffPx);
  readBool(obj, where, "dash_second_line_only", s.dashSecondLineOnly);
  readNum(obj, where, "width_jitter_px", s.widthJitterPx);
  readNum(obj, where, "gap_jitter_px", s.gapJitterPx);
  readBool(obj, where, "random_dash_phase", s.randomDashPhase);
}

}  // namespace

void PipelineConfig::validate() const {
  if (tileSize <= 2 * tileOverlap) throw ConfigError("config: tile size must exceed 2*overlap");
  if (tileOverlap < 0) throw ConfigError("config: overlap must be >= 0");
  if (simplifyEpsilon < 0.0) throw ConfigError("config: simplify epsilon must be >= 0");
  if (minSpurLength < 0.0) throw ConfigError("config: min spur length must be >= 0");
  if (gridSpacing <= 0.0) throw ConfigError("config: grid spacing must be positive");
  if (gridBuffer <= 0.0) throw ConfigError("config: grid buffer must be positive");
  if (gridNetTolerance <= 0.0) throw ConfigError("config: grid net tolerance must be positive");
  if (labelWidthPx < 1.0 || regionWidthPx < 1.0)
    throw ConfigError("config: corridor widths must be at least 1 px");
  if (evalBuffer <= 0.0) throw ConfigError("config: evaluation buffer must be positive");
  if (evalSampleStep <= 0.0) throw ConfigError("config: evaluation sample step must be positive");
  symbology.validate();
  baseline.validate();
  assignment.validate();
  const SyntheticParams& s = synthetic;
  if (s.width <= 0 || s.height <= 0) throw ConfigError("config: synthetic size must be positive");
  if (s.pixelSize <= 0.0) throw ConfigError("config: synthetic pixel size must be positive");
  if (s.segmentCount < 0) throw ConfigError("config: synthetic segment count must be >= 0");
  if (s.minLength <= 0.0 || s.maxLength < s.minLength)
    throw ConfigError("config: synthetic length range invalid");
  if (s.labelFlipRate < 0.0 || s.labelFlipRate > 1.0)
    throw ConfigError("config: label flip rate must be in [0, 1]");
  if (s.maskNoiseRate < 0.0 || s.maskNoiseRate > 1.0)
    throw ConfigError("config: mask noise rate must be in [0, 1]");
  if (s.ensembleMembers < 1) throw ConfigError("config: need at least one ensemble member");
  if (s.memberNoise < 0.0) throw ConfigError("config: member noise must be >= 0");
}

PipelineConfig PipelineConfig::fromJsonText(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: not valid JSON: ") + e.what());
  }
  expectKeys(doc, "top level",
             {"seed", "epsg", "tiling", "morphology", "vectorize", "grid_filter", "painter",
              "baseline", "assignment", "evaluation", "synthetic"});

  PipelineConfig c;
  if (doc.contains("seed")) {
    const json& s = doc["seed"];
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<std::int64_t>() >= 0))
      fail("seed", "expected a non-negative integer");
    c.seed = s.get<std::uint64_t>();
  }
  readInt(doc, "top level", "epsg", c.epsg);

  if (doc.contains("tiling")) {
    const json& t = doc["tiling"];
    expectKeys(t, "tiling", {"tile_size", "overlap"});
    readInt(t, "tiling", "tile_size", c.tileSize);
    readInt(t, "tiling", "overlap", c.tileOverlap);
  }
  if (doc.contains("morphology")) {
    const json& m = doc["morphology"];
    expectKeys(m, "morphology", {"min_area_px"});
    if (m.contains("min_area_px")) {
      if (!m["min_area_px"].is_number_integer() || m["min_area_px"].get<std::int64_t>() < 0)
        fail("morphology.min_area_px", "expected a non-negative integer");
      c.minArea = m["min_area_px"].get<std::size_t>();
    }
  }
  if (doc.contains("vectorize")) {
    const json& v = doc["vectorize"];
    expectKeys(v, "vectorize", {"simplify_epsilon_m", "min_spur_length_m"});
    readNum(v, "vectorize", "simplify_epsilon_m", c.simplifyEpsilon);
    readNum(v, "vectorize", "min_spur_length_m", c.minSpurLength);
  }
  if (doc.contains("grid_filter")) {
    const json& g = doc["grid_filter"];
    expectKeys(g, "grid_filter", {"enabled", "spacing_m", "buffer_m", "net_tolerance_m"});
    readBool(g, "grid_filter", "enabled", c.gridFilterEnabled);
    readNum(g, "grid_filter", "spacing_m", c.gridSpacing);
    readNum(g, "grid_filter", "buffer_m", c.gridBuffer);
    readNum(g, "grid_filter", "net_tolerance_m", c.gridNetTolerance);
  }
  if (doc.contains("painter")) {
    const json& p = doc["painter"];
    expectKeys(p, "painter",
               {"background", "stroke", "overpaint_width_px", "label_width_px",
                "region_width_px", "classes"});
    readColor(p, "painter", "background", c.symbology.background);
    readColor(p, "painter", "stroke", c.symbology.stroke);
    readNum(p, "painter", "overpaint_width_px", c.symbology.overpaintWidthPx);
    readNum(p, "painter", "label_width_px", c.labelWidthPx);
    readNum(p, "painter", "region_width_px", c.regionWidthPx);
    if (p.contains("classes")) {
      const json& arr = p["classes"];
      if (!arr.is_array() || arr.size() != c.symbology.classes.size())
        fail("painter.classes", "expected an array of 5 symbol objects");
      for (std::size_t i = 0; i < c.symbology.classes.size(); ++i)
        readSymbol(arr[i], "painter.classes[" + std::to_string(i) + "]",
                   c.symbology.classes[i]);
    }
  }
  if (doc.contains("baseline")) {
    const json& b = doc["baseline"];
    expectKeys(b, "baseline",
               {"temperature", "window_size", "rotation_step_deg", "dash_phase_variants",
                "displacement_radius_px"});
    readNum(b, "baseline", "temperature", c.baseline.temperature);
    readInt(b, "baseline", "window_size", c.baseline.windowSize);
    readNum(b, "baseline", "rotation_step_deg", c.baseline.rotationStepDeg);
    readInt(b, "baseline", "dash_phase_variants", c.baseline.dashPhaseVariants);
    readInt(b, "baseline", "displacement_radius_px", c.baseline.displacementRadius);
  }
  if (doc.contains("assignment")) {
    const json& a = doc["assignment"];
    expectKeys(a, "assignment",
               {"part_length_m", "min_section_length_m", "zonal_buffer_m", "end_trim_m"});
    readNum(a, "assignment", "part_length_m", c.assignment.partLength);
    readNum(a, "assignment", "min_section_length_m", c.assignment.minSectionLength);
    readNum(a, "assignment", "zonal_buffer_m", c.assignment.zonalBuffer);
    readNum(a, "assignment", "end_trim_m", c.assignment.endTrim);
  }
  if (doc.contains("evaluation")) {
    const json& e = doc["evaluation"];
    expectKeys(e, "evaluation", {"buffer_m", "sample_step_m"});
    readNum(e, "evaluation", "buffer_m", c.evalBuffer);
    readNum(e, "evaluation", "sample_step_m", c.evalSampleStep);
  }
  if (doc.contains("synthetic")) {
    const json& s = doc["synthetic"];
    expectKeys(s, "synthetic",
               {"width_px", "height_px", "origin_x", "origin_y", "pixel_size_m",
                "segment_count", "min_length_m", "max_length_m", "margin_m",
                "min_separation_m", "axis_avoid_deg", "label_flip_rate", "mask_noise_rate",
                "ensemble_members", "member_noise", "paint_grid"});
    readInt(s, "synthetic", "width_px", c.synthetic.width);
    readInt(s, "synthetic", "height_px", c.synthetic.height);
    readNum(s, "synthetic", "origin_x", c.synthetic.originX);
    readNum(s, "synthetic", "origin_y", c.synthetic.originY);
    readNum(s, "synthetic", "pixel_size_m", c.synthetic.pixelSize);
    readInt(s, "synthetic", "segment_count", c.synthetic.segmentCount);
    readNum(s, "synthetic", "min_length_m", c.synthetic.minLength);
    readNum(s, "synthetic", "max_length_m", c.synthetic.maxLength);
    readNum(s, "synthetic", "margin_m", c.synthetic.margin);
    readNum(s, "synthetic", "min_separation_m", c.synthetic.minSeparation);
    readNum(s, "synthetic", "axis_avoid_deg", c.synthetic.axisAvoidDeg);
    readNum(s, "synthetic", "label_flip_rate", c.synthetic.labelFlipRate);
    readNum(s, "synthetic", "mask_noise_rate", c.synthetic.maskNoiseRate);
    readInt(s, "synthetic", "ensemble_members", c.synthetic.ensembleMembers);
    readNum(s, "synthetic", "member_noise", c.synthetic.memberNoise);
    readBool(s, "synthetic", "paint_grid", c.synthetic.paintGrid);
  }
  c.validate();
  return c;
}

PipelineConfig PipelineConfig::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return fromJsonText(text.str());
}

std::string PipelineConfig::toJsonText() const {
  json classes = json::array();
  for (const ClassSymbol& s : symbology.classes) classes.push_back(symbolJson(s));
  json doc{
      {"seed", seed},
      {"epsg", epsg},
      {"tiling", {{"tile_size", tileSize}, {"overlap", tileOverlap}}},
      {"morphology", {{"min_area_px", minArea}}},
      {"vectorize",
       {{"simplify_epsilon_m", simplifyEpsilon}, {"min_spur_length_m", minSpurLength}}},
      {"grid_filter",
       {{"enabled", gridFilterEnabled},
        {"spacing_m", gridSpacing},
        {"buffer_m", gridBuffer},
        {"net_tolerance_m", gridNetTolerance}}},
      {"painter",
       {{"background", colorJson(symbology.background)},
        {"stroke", colorJson(symbology.stroke)},
        {"overpaint_width_px", symbology.overpaintWidthPx},
        {"label_width_px", labelWidthPx},
        {"region_width_px", regionWidthPx},
        {"classes", classes}}},
      {"baseline",
       {{"temperature", baseline.temperature},
        {"window_size", baseline.windowSize},
        {"rotation_step_deg", baseline.rotationStepDeg},
        {"dash_phase_variants", baseline.dashPhaseVariants},
        {"displacement_radius_px", baseline.displacementRadius}}},
      {"assignment",
       {{"part_length_m", assignment.partLength},
        {"min_section_length_m", assignment.minSectionLength},
        {"zonal_buffer_m", assignment.zonalBuffer},
        {"end_trim_m", assignment.endTrim}}},
      {"evaluation", {{"buffer_m", evalBuffer}, {"sample_step_m", evalSampleStep}}},
      {"synthetic",
       {{"width_px", synthetic.width},
        {"height_px", synthetic.height},
        {"origin_x", synthetic.originX},
        {"origin_y", synthetic.originY},
        {"pixel_size_m", synthetic.pixelSize},
        {"segment_count", synthetic.segmentCount},
        {"min_length_m", synthetic.minLength},
        {"max_length_m", synthetic.maxLength},
        {"margin_m", synthetic.margin},
        {"min_separation_m", synthetic.minSeparation},
        {"axis_avoid_deg", synthetic.axisAvoidDeg},
        {"label_flip_rate", synthetic.labelFlipRate},
        {"mask_noise_rate", synthetic.maskNoiseRate},
        {"ensemble_members", synthetic.ensembleMembers},
        {"member_noise", synthetic.memberNoise},
        {"paint_grid", synthetic.paintGrid}}},
  };
  return doc.dump(2) + "\n";
}

void PipelineConfig::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("config: cannot write " + path);
  out << toJsonText();
}

std::string PipelineConfig::hashHex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(toJsonText())));
  return buf;
}

}  // namespace roadvec
