#include "pipeline/stages.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "assignment/assignment.hpp"
#include "core/rng.hpp"
#include "evaluation/line_metrics.hpp"
#include "evaluation/pixel_metrics.hpp"
#include "evaluation/report.hpp"
#include "io/geojson_io.hpp"
#include "io/probfield_io.hpp"
#include "io/raster_io.hpp"
#include "morphology/morphology.hpp"
#include "painter/painter.hpp"
#include "pipeline/fixture.hpp"
#include "pipeline/manifest.hpp"
#include "probability/baseline.hpp"
#include "probability/ensemble.hpp"
#include "probability/hardmask.hpp"
#include "tiling/tiling.hpp"
#include "vectorize/gridfilter.hpp"
#include "vectorize/simplify.hpp"
#include "vectorize/trace.hpp"

namespace roadvec {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

class StageTimer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string joinPath(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

// Coordinate-grid spec spanning a raster extent.
GridSpec gridSpecFor(const PipelineConfig& config, double minX, double maxX, double minY,
                     double maxY) {
  GridSpec spec;
  spec.xCoordinates = gridCoordinates(minX, maxX, config.gridSpacing);
  spec.yCoordinates = gridCoordinates(minY, maxY, config.gridSpacing);
  spec.buffer = config.gridBuffer;
  spec.netTolerance = config.gridNetTolerance;
  return spec;
}

void paintCoordinateGrid(ByteRaster& sheet, const PipelineConfig& config) {
  const GeoTransform& t = sheet.transform();
  double minX = t.originX;
  double maxX = t.originX + sheet.width() * t.pixelSize;
  double maxY = t.originY;
  double minY = t.originY - sheet.height() * t.pixelSize;
  for (double x : gridCoordinates(minX, maxX, config.gridSpacing))
    paintCorridor(sheet, {{x, minY}, {x, maxY}}, 1.0, config.symbology.stroke);
  for (double y : gridCoordinates(minY, maxY, config.gridSpacing))
    paintCorridor(sheet, {{minX, y}, {maxX, y}}, 1.0, config.symbology.stroke);
}

ByteRaster expandToRgb(const ByteRaster& raster) {
  if (raster.bandCount() == 3) return raster;
  if (raster.bandCount() != 1)
    throw DataError("expected a gray or rgb raster, got " + std::to_string(raster.bandCount()) +
                    " bands");
  ByteRaster rgb(raster.width(), raster.height(), 3, BandSemantics::rgb, raster.transform());
  for (int b = 0; b < 3; ++b)
    std::copy(raster.band(0).begin(), raster.band(0).end(), rgb.band(b).begin());
  return rgb;
}

// In-memory mirror of the per-tile inference loop: tile the sheet, classify
// each tile against its region-of-interest tile, reassemble the central
// crops. Keeps big sheets off the disk; the CLI tile/stitch commands cover
// the artifact-level route.
ProbabilityField tiledBaseline(const PipelineConfig& config, const ByteRaster& map,
                               const ByteRaster& roi) {
  TileGrid<std::uint8_t> mapTiles = makeTiles(map, config.tileSize, config.tileOverlap);
  TileGrid<std::uint8_t> roiTiles = makeTiles(roi, config.tileSize, config.tileOverlap);

  TileGrid<float> outTiles;
  outTiles.tileSize = mapTiles.tileSize;
  outTiles.overlap = mapTiles.overlap;
  outTiles.sourceWidth = mapTiles.sourceWidth;
  outTiles.sourceHeight = mapTiles.sourceHeight;
  outTiles.sourceTransform = mapTiles.sourceTransform;
  for (std::size_t i = 0; i < mapTiles.tiles.size(); ++i) {
    const auto& tile = mapTiles.tiles[i];
    ProbabilityField field = baselineClassifier(tile.raster, config.symbology, config.baseline,
                                                &roiTiles.tiles[i].raster);
    outTiles.tiles.push_back({tile.row, tile.col, std::move(field.raster())});
  }
  return ProbabilityField(stitchTiles(outTiles));
}

void writeTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw DataError("failed writing " + path);
}

ordered_json readJsonFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const ordered_json::parse_error& e) {
    throw DataError(path + ": " + e.what());
  }
  return doc;
}

std::string formatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

void StageRecorder::record(const std::string& stage, const std::vector<std::string>& inputs,
                           const std::vector<std::string>& outputs,
                           double wallSeconds) const {
  if (manifestPath.empty()) return;
  ManifestEntry entry;
  entry.stage = stage;
  for (const std::string& path : inputs)
    if (!path.empty()) entry.inputs.emplace_back(path, fileHashHex(path));
  entry.configHash = configHash;
  entry.seed = seed;
  entry.wallSeconds = wallSeconds;
  for (const std::string& path : outputs)
    if (!path.empty()) entry.outputs.push_back(path);
  appendManifest(manifestPath, entry);
}

ByteRaster readMaskPng(const std::string& path) {
  ByteRaster raster = readRaster(path);
  if (raster.bandCount() != 1)
    throw DataError(path + ": mask must be single-band, got " +
                    std::to_string(raster.bandCount()) + " bands");
  for (std::uint8_t& v : raster.band(0)) {
    if (v == 255)
      v = 1;
    else if (v != 0)
      throw DataError(path + ": mask pixels must be 0 or 255, found " + std::to_string(v));
  }
  raster.setSemantics(BandSemantics::binaryMask);
  return raster;
}

void writeMaskPng(const std::string& path, const ByteRaster& mask) {
  requireBinaryMask(mask, "writeMaskPng");
  ByteRaster out(mask.width(), mask.height(), 1, BandSemantics::gray, mask.transform());
  auto src = mask.band(0);
  auto dst = out.band(0);
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i] ? 255 : 0;
  writeRaster(path, out);
}

ByteRaster readLabelsPng(const std::string& path) {
  ByteRaster raster = readRaster(path);
  if (raster.bandCount() != 1)
    throw DataError(path + ": labels must be single-band, got " +
                    std::to_string(raster.bandCount()) + " bands");
  raster.setSemantics(BandSemantics::classLabel);
  validateSemantics(raster);
  return raster;
}

void writeLabelsPng(const std::string& path, const ByteRaster& labels) {
  ByteRaster out = labels;
  out.setSemantics(BandSemantics::classLabel);
  validateSemantics(out);
  out.setSemantics(BandSemantics::gray);  // stored as raw values
  writeRaster(path, out);
}

std::string stageTile(const PipelineConfig& config, const StageRecorder& rec,
                      const std::string& imagePath, const std::string& outDir) {
  StageTimer timer;
  ByteRaster source = readRaster(imagePath);
  TileGrid<std::uint8_t> grid = makeTiles(source, config.tileSize, config.tileOverlap);
  fs::create_directories(outDir);

  std::string stem = fs::path(imagePath).stem().string();
  ordered_json tiles = ordered_json::array();
  std::vector<std::string> outputs;
  for (const auto& tile : grid.tiles) {
    std::string name =
        stem + "_" + std::to_string(tile.row) + "_" + std::to_string(tile.col) + ".png";
    std::string tilePath = joinPath(outDir, name);
    writeRaster(tilePath, tile.raster);
    tiles.push_back({{"row", tile.row}, {"col", tile.col}, {"file", name}});
    outputs.push_back(tilePath);
  }

  ordered_json doc{{"sheet", stem},
                   {"tile_size", grid.tileSize},
                   {"overlap", grid.overlap},
                   {"source_width", grid.sourceWidth},
                   {"source_height", grid.sourceHeight},
                   {"origin_x", grid.sourceTransform.originX},
                   {"origin_y", grid.sourceTransform.originY},
                   {"pixel_size", grid.sourceTransform.pixelSize},
                   {"rows", grid.rowCount()},
                   {"cols", grid.colCount()},
                   {"tiles", tiles}};
  std::string descriptorPath = joinPath(outDir, stem + "_tiling.json");
  writeTextFile(descriptorPath, doc.dump(2) + "\n");
  outputs.push_back(descriptorPath);

  rec.record("tile", {imagePath}, outputs, timer.seconds());
  return descriptorPath;
}

namespace {

struct TilingDescriptor {
  int tileSize = 0;
  int overlap = 0;
  int sourceWidth = 0;
  int sourceHeight = 0;
  GeoTransform transform;
  std::vector<std::tuple<int, int, std::string>> tiles;  // row, col, file
};

TilingDescriptor readTilingDescriptor(const std::string& path) {
  ordered_json doc = readJsonFile(path);
  TilingDescriptor d;
  try {
    d.tileSize = doc.at("tile_size").get<int>();
    d.overlap = doc.at("overlap").get<int>();
    d.sourceWidth = doc.at("source_width").get<int>();
    d.sourceHeight = doc.at("source_height").get<int>();
    d.transform.originX = doc.at("origin_x").get<double>();
    d.transform.originY = doc.at("origin_y").get<double>();
    d.transform.pixelSize = doc.at("pixel_size").get<double>();
    for (const auto& t : doc.at("tiles"))
      d.tiles.emplace_back(t.at("row").get<int>(), t.at("col").get<int>(),
                           t.at("file").get<std::string>());
  } catch (const ordered_json::exception& e) {
    throw DataError(path + ": " + e.what());
  }
  if (d.tiles.empty()) throw DataError(path + ": descriptor lists no tiles");
  return d;
}

template <typename T>
TileGrid<T> emptyGridFrom(const TilingDescriptor& d) {
  TileGrid<T> grid;
  grid.tileSize = d.tileSize;
  grid.overlap = d.overlap;
  grid.sourceWidth = d.sourceWidth;
  grid.sourceHeight = d.sourceHeight;
  grid.sourceTransform = d.transform;
  return grid;
}

}  // namespace

void stageStitch(const PipelineConfig& config, const StageRecorder& rec,
                 const std::string& tilingJsonPath, const std::string& outPath) {
  (void)config;
  StageTimer timer;
  TilingDescriptor d = readTilingDescriptor(tilingJsonPath);
  std::string dir = fs::path(tilingJsonPath).parent_path().string();
  std::vector<std::string> inputs{tilingJsonPath};

  // The output extension picks the tile flavor: .probf stitches probability
  // tiles (same names, .probf extension), anything else the recorded images.
  if (fs::path(outPath).extension() == ".probf") {
    TileGrid<float> grid = emptyGridFrom<float>(d);
    for (const auto& [row, col, file] : d.tiles) {
      std::string tilePath = joinPath(dir, fs::path(file).replace_extension(".probf").string());
      ProbabilityField field = readProbabilityField(tilePath);
      grid.tiles.push_back({row, col, std::move(field.raster())});
      inputs.push_back(tilePath);
    }
    writeProbabilityField(outPath, ProbabilityField(stitchTiles(grid)));
  } else {
    TileGrid<std::uint8_t> grid = emptyGridFrom<std::uint8_t>(d);
    for (const auto& [row, col, file] : d.tiles) {
      std::string tilePath = joinPath(dir, file);
      grid.tiles.push_back({row, col, readRaster(tilePath)});
      inputs.push_back(tilePath);
    }
    writeRaster(outPath, stitchTiles(grid));
  }
  rec.record("stitch", inputs, {outPath}, timer.seconds());
}

void stageMorph(const PipelineConfig& config, const StageRecorder& rec,
                const std::string& maskPath, const std::string& outPath) {
  StageTimer timer;
  ByteRaster mask = readMaskPng(maskPath);
  mask = removeSmallComponents(closeMask(mask), config.minArea);
  writeMaskPng(outPath, mask);
  rec.record("morph", {maskPath}, {outPath}, timer.seconds());
}

void stageSkeleton(const PipelineConfig& config, const StageRecorder& rec,
                   const std::string& maskPath, const std::string& outPath) {
  (void)config;
  StageTimer timer;
  writeMaskPng(outPath, skeletonize(readMaskPng(maskPath)));
  rec.record("skeleton", {maskPath}, {outPath}, timer.seconds());
}

void stageVectorize(const PipelineConfig& config, const StageRecorder& rec,
                    const std::string& skeletonPath, const std::string& outPath) {
  StageTimer timer;
  RoadNetwork network = assembleSegments(traceSkeleton(readMaskPng(skeletonPath)));
  pruneSpurs(network, config.minSpurLength);
  simplifyNetwork(network, config.simplifyEpsilon);
  writeNetwork(outPath, network, config.epsg);
  rec.record("vectorize", {skeletonPath}, {outPath}, timer.seconds());
}

void stageGridFilter(const PipelineConfig& config, const StageRecorder& rec,
                     const std::string& networkPath, const std::string& keptPath,
                     const std::string& removedPath) {
  StageTimer timer;
  RoadNetwork network = readNetwork(networkPath);
  if (!config.gridFilterEnabled) {
    writeNetwork(keptPath, network, config.epsg);
    if (!removedPath.empty()) writeNetwork(removedPath, RoadNetwork{}, config.epsg);
    rec.record("gridfilter", {networkPath}, {keptPath, removedPath}, timer.seconds());
    return;
  }

  double minX = std::numeric_limits<double>::infinity(), maxX = -minX;
  double minY = minX, maxY = -minX;
  for (const auto& [id, seg] : network.segments())
    for (const Point2& p : seg.line) {
      minX = std::min(minX, p.x);
      maxX = std::max(maxX, p.x);
      minY = std::min(minY, p.y);
      maxY = std::max(maxY, p.y);
    }

  GridFilterResult result;
  if (network.segments().empty()) {
    result.kept = std::move(network);
  } else {
    result = filterGridLines(network, gridSpecFor(config, minX, maxX, minY, maxY));
  }
  writeNetwork(keptPath, result.kept, config.epsg);
  if (!removedPath.empty()) writeNetwork(removedPath, result.removed, config.epsg);
  rec.record("gridfilter", {networkPath}, {keptPath, removedPath}, timer.seconds());
}

void stagePaint(const PipelineConfig& config, const StageRecorder& rec,
                const std::string& networkPath, const std::string& basePath,
                const std::string& mapPath, const std::string& labelsPath,
                const std::string& regionPath, const std::string& truthPath) {
  StageTimer timer;
  RoadNetwork network = readNetwork(networkPath);
  ByteRaster base = basePath.empty()
                        ? blankSheet(config.synthetic, config.symbology.background)
                        : expandToRgb(readRaster(basePath));
  // The grid goes on first so road symbology overpaints it, as printing did.
  if (config.synthetic.paintGrid) paintCoordinateGrid(base, config);

  SyntheticTriplet triplet =
      buildSyntheticDataset(base, network, config.symbology, subSeed(config.seed, "paint"),
                            config.labelWidthPx, config.regionWidthPx);
  writeRaster(mapPath, triplet.map);
  if (!labelsPath.empty()) writeLabelsPng(labelsPath, triplet.labels);
  if (!regionPath.empty()) writeMaskPng(regionPath, triplet.regionMask);
  if (!truthPath.empty())
    writeClassifiedNetwork(truthPath, classifiedTruth(network, triplet.assignment), config.epsg);
  rec.record("paint", {networkPath, basePath}, {mapPath, labelsPath, regionPath, truthPath},
             timer.seconds());
}

void stageClassifyBaseline(const PipelineConfig& config, const StageRecorder& rec,
                           const std::string& mapPath, const std::string& outPath,
                           const std::string& roiPath) {
  StageTimer timer;
  ByteRaster map = readRaster(mapPath);
  ByteRaster roi;
  if (!roiPath.empty()) roi = readMaskPng(roiPath);
  ProbabilityField field = baselineClassifier(map, config.symbology, config.baseline,
                                              roiPath.empty() ? nullptr : &roi);
  writeProbabilityField(outPath, field);
  rec.record("classify-baseline", {mapPath, roiPath}, {outPath}, timer.seconds());
}

void stageEnsemble(const PipelineConfig& config, const StageRecorder& rec,
                   const std::string& membersDir, const std::string& outPath) {
  (void)config;
  StageTimer timer;
  EnsembleAccumulator acc;
  std::vector<std::string> inputs;
  for (int k = 1;; ++k) {
    std::string memberPath = joinPath(membersDir, "member_" + std::to_string(k) + ".probf");
    if (!fs::exists(memberPath)) break;
    acc.add(readProbabilityField(memberPath));
    inputs.push_back(memberPath);
  }
  if (acc.count() == 0)
    throw DataError("no member_<k>.probf files found in " + membersDir);
  writeProbabilityField(outPath, acc.average());
  rec.record("ensemble", inputs, {outPath}, timer.seconds());
}

void stageMask(const PipelineConfig& config, const StageRecorder& rec,
               const std::string& probfPath, const std::string& regionPath,
               const std::string& outPath) {
  (void)config;
  StageTimer timer;
  ProbabilityField field = readProbabilityField(probfPath);
  ByteRaster region = readMaskPng(regionPath);
  writeProbabilityField(outPath, applyHardMask(field, region));
  rec.record("mask", {probfPath, regionPath}, {outPath}, timer.seconds());
}

namespace {

void writeZonalProfiles(const std::string& path, const RoadNetwork& network,
                        const ProbabilityField& field, const AssignmentParams& params) {
  std::string csv = "segment_id,part_index,start_m,end_m,p1,p2,p3,p4,p5,interpolated\n";
  char buf[256];
  for (const auto& [id, seg] : network.segments()) {
    ZonalProfile profile;
    try {
      profile = zonalMeanProfile(seg.line, discretizeSegment(seg.line, params.partLength), field,
                                 params.zonalBuffer);
    } catch (const DataError&) {
      continue;  // the assign stage already reported this segment
    }
    for (std::size_t i = 0; i < profile.parts.size(); ++i) {
      const ZonalPart& part = profile.parts[i];
      std::snprintf(buf, sizeof buf, "%s,%zu,%.3f,%.3f,%.6f,%.6f,%.6f,%.6f,%.6f,%d\n", id.c_str(),
                    i, part.start, part.end, part.meanProbs[0], part.meanProbs[1],
                    part.meanProbs[2], part.meanProbs[3], part.meanProbs[4],
                    part.interpolated ? 1 : 0);
      csv += buf;
    }
  }
  writeTextFile(path, csv);
}

}  // namespace

void stageAssign(const PipelineConfig& config, const StageRecorder& rec,
                 const std::string& probfPath, const std::string& networkPath,
                 const std::string& outPath, const std::string& profilesPath) {
  StageTimer timer;
  ProbabilityField field = readProbabilityField(probfPath);
  RoadNetwork network = readNetwork(networkPath);
  ClassifyResult result = classifyNetwork(network, field, config.assignment);
  for (const std::string& failure : result.failures)
    std::cerr << "warning: " << failure << "\n";
  writeClassifiedNetwork(outPath, result.network, config.epsg);
  if (!profilesPath.empty())
    writeZonalProfiles(profilesPath, network, field, config.assignment);
  rec.record("assign", {probfPath, networkPath}, {outPath, profilesPath}, timer.seconds());
}

std::string stageEval(const PipelineConfig& config, const StageRecorder& rec,
                      const std::string& truthPath, const std::string& predPath,
                      const std::string& reportPath, const std::string& labelsPath,
                      const std::string& probfPath, const std::string& evalMaskPath) {
  StageTimer timer;
  ClassifiedNetwork truth = readClassifiedNetwork(truthPath);
  ClassifiedNetwork pred = readClassifiedNetwork(predPath);
  LineMetricReport line = lineMetrics(truth, pred, config.evalBuffer, config.evalSampleStep);

  ordered_json report;
  report["line_metrics"] = ordered_json::parse(lineMetricsJson(line));
  std::string tables = lineMetricsTable(line);

  if (!labelsPath.empty() && !probfPath.empty()) {
    ByteRaster labels = readLabelsPng(labelsPath);
    ProbabilityField field = readProbabilityField(probfPath);
    ByteRaster evalMask;
    if (!evalMaskPath.empty()) evalMask = readMaskPng(evalMaskPath);
    MetricSet pixel =
        pixelMetrics(field, labels, evalMaskPath.empty() ? nullptr : &evalMask);
    report["pixel_metrics"] = ordered_json::parse(pixelMetricsJson(pixel));
    tables += "\n" + pixelMetricsTable(pixel);
  }

  if (!reportPath.empty()) writeTextFile(reportPath, report.dump(2) + "\n");
  rec.record("eval", {truthPath, predPath, labelsPath, probfPath, evalMaskPath}, {reportPath},
             timer.seconds());
  return tables;
}

void stageRender(const PipelineConfig& config, const StageRecorder& rec,
                 const std::string& predPath, const std::string& basePath,
                 const std::string& outPath) {
  StageTimer timer;
  ClassifiedNetwork pred = readClassifiedNetwork(predPath);

  ByteRaster canvas;
  if (!basePath.empty()) {
    canvas = expandToRgb(readRaster(basePath));
    // Flatten the base to its gray tones so the class colors stand out.
    auto r = canvas.band(0);
    auto g = canvas.band(1);
    auto b = canvas.band(2);
    for (std::size_t i = 0; i < r.size(); ++i) {
      auto gray = static_cast<std::uint8_t>((r[i] + g[i] + b[i]) / 3);
      std::uint8_t lifted = static_cast<std::uint8_t>(128 + gray / 2);  // washed out
      r[i] = g[i] = b[i] = lifted;
    }
  } else {
    if (pred.sections().empty()) throw DataError("nothing to render: empty network");
    double minX = std::numeric_limits<double>::infinity(), maxX = -minX;
    double minY = minX, maxY = -minX;
    for (const auto& [id, section] : pred.sections())
      for (const Point2& p : section.line) {
        minX = std::min(minX, p.x);
        maxX = std::max(maxX, p.x);
        minY = std::min(minY, p.y);
        maxY = std::max(maxY, p.y);
      }
    double px = config.synthetic.pixelSize;
    double pad = 50.0;
    int w = std::max(1, static_cast<int>(std::ceil((maxX - minX + 2 * pad) / px)));
    int h = std::max(1, static_cast<int>(std::ceil((maxY - minY + 2 * pad) / px)));
    canvas = ByteRaster(w, h, 3, BandSemantics::rgb,
                        GeoTransform{minX - pad, maxY + pad, px}, 255);
  }

  static constexpr Rgb kClassColors[kRoadClassCount] = {
      {40, 80, 220},    // class 1 blue
      {30, 150, 60},    // class 2 green
      {150, 60, 200},   // class 3 purple
      {240, 140, 20},   // class 4 orange
      {220, 40, 40},    // class 5 red
  };
  for (const auto& [id, section] : pred.sections())
    paintCorridor(canvas, section.line, 3.0, kClassColors[section.roadClass.index()]);

  writeRaster(outPath, canvas);
  rec.record("render", {predPath, basePath}, {outPath}, timer.seconds());
}

namespace {

// Shared tail of both pipeline drivers: hard-mask the probabilities to the
// corridor of the extracted network, assign classes, evaluate when truth
// geometry exists, optionally render.
std::string finishPipeline(const PipelineConfig& config, const StageRecorder& rec,
                           const std::string& outDir, const ProbabilityField& raw,
                           const std::string& rawPath, const std::string& truthPath,
                           const std::string& labelsPath, const std::string& renderBase,
                           bool render) {
  auto out = [&](const char* name) { return joinPath(outDir, name); };

  StageTimer timer;
  RoadNetwork extracted = readNetwork(out("network.geojson"));
  ByteRaster corridor = rasterizeCenterlines(extracted, config.regionWidthPx, raw.transform(),
                                             raw.width(), raw.height());
  writeMaskPng(out("corridor.png"), corridor);
  writeProbabilityField(out("probs.probf"), applyHardMask(raw, corridor));
  rec.record("mask", {out("network.geojson"), rawPath}, {out("corridor.png"), out("probs.probf")},
             timer.seconds());

  stageAssign(config, rec, out("probs.probf"), out("network.geojson"), out("pred.geojson"),
              out("profiles.csv"));

  std::string tables;
  if (!truthPath.empty())
    tables = stageEval(config, rec, truthPath, out("pred.geojson"), out("report.json"),
                       labelsPath, labelsPath.empty() ? "" : out("probs.probf"), "");
  if (render) stageRender(config, rec, out("pred.geojson"), renderBase, out("render.png"));
  return tables;
}

StageRecorder makeRecorder(const PipelineConfig& config, const std::string& outDir) {
  std::string manifestPath = joinPath(outDir, "manifest.jsonl");
  std::ofstream(manifestPath, std::ios::trunc);  // one run, one log
  return StageRecorder{manifestPath, config.hashHex(), config.seed};
}

}  // namespace

std::string runSyntheticPipeline(const PipelineConfig& config, const std::string& outDir,
                                 bool oracle, bool render) {
  config.validate();
  fs::create_directories(outDir);
  StageRecorder rec = makeRecorder(config, outDir);
  auto out = [&](const char* name) { return joinPath(outDir, name); };
  config.save(out("config.json"));

  StageTimer fixtureTimer;
  RoadNetwork roads = randomNetwork(config.synthetic, subSeed(config.seed, "fixture"));
  writeNetwork(out("roads.geojson"), roads, config.epsg);
  rec.record("fixture", {}, {out("roads.geojson")}, fixtureTimer.seconds());

  stagePaint(config, rec, out("roads.geojson"), "", out("map.png"), out("labels.png"),
             out("region.png"), out("truth.geojson"));

  // Stand-in for the separate binary road segmentation: the painted region
  // corridor with salt-and-pepper noise, so the cleanup stages have work.
  StageTimer noiseTimer;
  ByteRaster mask = readMaskPng(out("region.png"));
  Rng rng(subSeed(config.seed, "masknoise"));
  for (std::uint8_t& v : mask.band(0))
    if (rng.uniformReal() < config.synthetic.maskNoiseRate) v = v ? 0 : 1;
  writeMaskPng(out("mask_input.png"), mask);
  rec.record("mask-noise", {out("region.png")}, {out("mask_input.png")}, noiseTimer.seconds());

  stageMorph(config, rec, out("mask_input.png"), out("mask_clean.png"));
  stageSkeleton(config, rec, out("mask_clean.png"), out("skeleton.png"));
  stageVectorize(config, rec, out("skeleton.png"), out("extracted.geojson"));
  stageGridFilter(config, rec, out("extracted.geojson"), out("network.geojson"),
                  out("grid_removed.geojson"));

  StageTimer classifyTimer;
  ProbabilityField raw;
  if (oracle) {
    ByteRaster labels = readLabelsPng(out("labels.png"));
    raw = oneHotFromLabels(flipLabels(labels, config.synthetic.labelFlipRate,
                                      subSeed(config.seed, "labelflip")));
    writeProbabilityField(out("probs_raw.probf"), raw);
    rec.record("classify-oracle", {out("labels.png")}, {out("probs_raw.probf")},
               classifyTimer.seconds());
  } else {
    ByteRaster map = readRaster(out("map.png"));
    ByteRaster region = readMaskPng(out("region.png"));
    raw = tiledBaseline(config, map, region);
    writeProbabilityField(out("probs_raw.probf"), raw);
    rec.record("classify-baseline", {out("map.png"), out("region.png")},
               {out("probs_raw.probf")}, classifyTimer.seconds());
  }

  std::string rawPath = out("probs_raw.probf");
  if (config.synthetic.ensembleMembers > 1) {
    StageTimer ensembleTimer;
    std::string membersDir = out("members");
    fs::create_directories(membersDir);
    EnsembleAccumulator acc;
    std::vector<std::string> memberPaths;
    for (int k = 1; k <= config.synthetic.ensembleMembers; ++k) {
      ProbabilityField member = noisyEnsembleMember(
          raw, config.synthetic.memberNoise, subSeed(config.seed, "member/" + std::to_string(k)));
      std::string memberPath = joinPath(membersDir, "member_" + std::to_string(k) + ".probf");
      writeProbabilityField(memberPath, member);
      memberPaths.push_back(memberPath);
      acc.add(member);
    }
    raw = acc.average();
    rawPath = out("probs_ensemble.probf");
    writeProbabilityField(rawPath, raw);
    rec.record("ensemble", memberPaths, {rawPath}, ensembleTimer.seconds());
  }

  return finishPipeline(config, rec, outDir, raw, rawPath, out("truth.geojson"),
                        out("labels.png"), out("map.png"), render);
}

std::string runRealPipeline(const PipelineConfig& config, const std::string& outDir,
                            const RealPipelineInputs& inputs, bool render) {
  config.validate();
  if (inputs.maskPath.empty()) throw ConfigError("a binary road mask is required");
  int sources = (!inputs.probfPath.empty() ? 1 : 0) + (!inputs.membersDir.empty() ? 1 : 0) +
                (!inputs.mapPath.empty() ? 1 : 0);
  if (sources == 0)
    throw ConfigError("need a probability source: a field, an ensemble directory, or a map image");

  fs::create_directories(outDir);
  StageRecorder rec = makeRecorder(config, outDir);
  auto out = [&](const char* name) { return joinPath(outDir, name); };
  config.save(out("config.json"));

  stageMorph(config, rec, inputs.maskPath, out("mask_clean.png"));
  stageSkeleton(config, rec, out("mask_clean.png"), out("skeleton.png"));
  stageVectorize(config, rec, out("skeleton.png"), out("extracted.geojson"));
  stageGridFilter(config, rec, out("extracted.geojson"), out("network.geojson"),
                  out("grid_removed.geojson"));

  ProbabilityField raw;
  std::string rawPath;
  if (!inputs.probfPath.empty()) {
    raw = readProbabilityField(inputs.probfPath);
    rawPath = inputs.probfPath;
  } else if (!inputs.membersDir.empty()) {
    rawPath = out("probs_ensemble.probf");
    stageEnsemble(config, rec, inputs.membersDir, rawPath);
    raw = readProbabilityField(rawPath);
  } else {
    StageTimer classifyTimer;
    ByteRaster map = readRaster(inputs.mapPath);
    ByteRaster roi = readMaskPng(out("mask_clean.png"));
    raw = tiledBaseline(config, map, roi);
    rawPath = out("probs_raw.probf");
    writeProbabilityField(rawPath, raw);
    rec.record("classify-baseline", {inputs.mapPath, out("mask_clean.png")}, {rawPath},
               classifyTimer.seconds());
  }

  return finishPipeline(config, rec, outDir, raw, rawPath, inputs.truthPath, "", inputs.mapPath,
                        render);
}

namespace {

struct SweepCell {
  double partLength = 0.0;
  double minSectionLength = 0.0;
  double zonalBuffer = 0.0;

  friend bool operator==(const SweepCell&, const SweepCell&) = default;
};

void appendSweepRows(std::string& csv, const SweepCell& cell, const ordered_json& line) {
  auto score = [](const ordered_json& v) -> std::string {
    if (v.is_null()) return "";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v.get<double>());
    return buf;
  };
  char buf[256];
  for (const auto& cls : line.at("classes")) {
    std::snprintf(buf, sizeof buf, "%s,%s,%s,%d,%.3f,%.3f,%s,%s\n",
                  formatDouble(cell.partLength).c_str(),
                  formatDouble(cell.minSectionLength).c_str(),
                  formatDouble(cell.zonalBuffer).c_str(), cls.at("road_class").get<int>(),
                  cls.at("gt_length_m").get<double>(), cls.at("pred_length_m").get<double>(),
                  score(cls.at("completeness")).c_str(), score(cls.at("correctness")).c_str());
    csv += buf;
  }
  const auto& wtd = line.at("weighted");
  std::snprintf(buf, sizeof buf, "%s,%s,%s,wtd,,,%s,%s\n", formatDouble(cell.partLength).c_str(),
                formatDouble(cell.minSectionLength).c_str(),
                formatDouble(cell.zonalBuffer).c_str(), score(wtd.at("completeness")).c_str(),
                score(wtd.at("correctness")).c_str());
  csv += buf;
}

}  // namespace

std::string runSweep(const PipelineConfig& config, const std::string& outDir,
                     const std::string& probfPath, const std::string& networkPath,
                     const std::string& truthPath, const std::vector<double>& partLengths,
                     const std::vector<double>& minSectionLengths,
                     const std::vector<double>& zonalBuffers) {
  config.validate();
  fs::create_directories(joinPath(outDir, "cells"));
  StageRecorder rec = makeRecorder(config, outDir);
  StageTimer timer;

  ProbabilityField field = readProbabilityField(probfPath);
  RoadNetwork network = readNetwork(networkPath);
  ClassifiedNetwork truth = readClassifiedNetwork(truthPath);

  // One-at-a-time variation around the configured defaults; duplicates (the
  // default value appearing in its own list) collapse, so three 3-value lists
  // yield seven distinct cells.
  const AssignmentParams& defaults = config.assignment;
  std::vector<double> deltas = partLengths.empty() ? std::vector<double>{5, 10, 20} : partLengths;
  std::vector<double> minLens =
      minSectionLengths.empty() ? std::vector<double>{40, 80, 120} : minSectionLengths;
  std::vector<double> buffers = zonalBuffers.empty() ? std::vector<double>{4, 6, 10} : zonalBuffers;

  std::vector<SweepCell> cells{
      {defaults.partLength, defaults.minSectionLength, defaults.zonalBuffer}};
  auto addCell = [&](SweepCell cell) {
    if (std::find(cells.begin(), cells.end(), cell) == cells.end()) cells.push_back(cell);
  };
  for (double v : deltas) addCell({v, defaults.minSectionLength, defaults.zonalBuffer});
  for (double v : minLens) addCell({defaults.partLength, v, defaults.zonalBuffer});
  for (double v : buffers) addCell({defaults.partLength, defaults.minSectionLength, v});

  std::string csv = "delta_m,min_length_m,buffer_m,road_class,gt_m,pred_m,completeness,correctness\n";
  std::string configHash = config.hashHex();
  for (const SweepCell& cell : cells) {
    std::string cellPath =
        joinPath(outDir, std::string("cells/cell_") + formatDouble(cell.partLength) + "_" +
                             formatDouble(cell.minSectionLength) + "_" +
                             formatDouble(cell.zonalBuffer) + ".json");
    ordered_json cellDoc;
    bool cached = false;
    if (fs::exists(cellPath)) {
      // Interrupted sweeps resume from finished cells, as long as the config
      // and inputs still match.
      try {
        cellDoc = readJsonFile(cellPath);
        cached = cellDoc.at("config_hash").get<std::string>() == configHash &&
                 cellDoc.at("probf_hash").get<std::string>() == fileHashHex(probfPath) &&
                 cellDoc.at("network_hash").get<std::string>() == fileHashHex(networkPath);
      } catch (const std::exception&) {
        cached = false;
      }
    }
    if (!cached) {
      AssignmentParams params = defaults;
      params.partLength = cell.partLength;
      params.minSectionLength = cell.minSectionLength;
      params.zonalBuffer = cell.zonalBuffer;
      ClassifyResult result = classifyNetwork(network, field, params);
      LineMetricReport line =
          lineMetrics(truth, result.network, config.evalBuffer, config.evalSampleStep);
      cellDoc = ordered_json{{"delta_m", cell.partLength},
                             {"min_length_m", cell.minSectionLength},
                             {"buffer_m", cell.zonalBuffer},
                             {"config_hash", configHash},
                             {"probf_hash", fileHashHex(probfPath)},
                             {"network_hash", fileHashHex(networkPath)},
                             {"line_metrics", ordered_json::parse(lineMetricsJson(line))}};
      writeTextFile(cellPath, cellDoc.dump(2) + "\n");
    }
    appendSweepRows(csv, cell, cellDoc.at("line_metrics"));
  }

  std::string csvPath = joinPath(outDir, "sweep.csv");
  writeTextFile(csvPath, csv);
  rec.record("sweep", {probfPath, networkPath, truthPath}, {csvPath}, timer.seconds());
  return csvPath;
}

}  // namespace roadvec
