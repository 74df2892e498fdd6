// roadvec: scanned map sheets in, classified vector road networks out.
// Every subcommand is one pipeline stage; `pipeline` chains them all.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "core/error.hpp"
#include "pipeline/config.hpp"
#include "pipeline/stages.hpp"

namespace {

struct CommonArgs {
  std::string configPath;
  std::string manifestPath;
  std::uint64_t seed = 0;
  bool seedSet = false;
};

roadvec::PipelineConfig loadConfig(const CommonArgs& common) {
  roadvec::PipelineConfig config;
  if (!common.configPath.empty()) config = roadvec::PipelineConfig::load(common.configPath);
  if (common.seedSet) config.seed = common.seed;
  config.validate();
  return config;
}

roadvec::StageRecorder recorderFor(const roadvec::PipelineConfig& config,
                                   const CommonArgs& common) {
  return roadvec::StageRecorder{common.manifestPath, config.hashHex(), config.seed};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classified vector road networks from scanned map sheets"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonArgs common;
  app.add_option("--config", common.configPath, "pipeline configuration (JSON)");
  app.add_option("--manifest", common.manifestPath, "append stage records to this JSONL file");
  app.add_option_function<std::uint64_t>(
         "--seed",
         [&common](std::uint64_t v) {
           common.seed = v;
           common.seedSet = true;
         },
         "override the configured random seed")
      ->check(CLI::NonNegativeNumber);

  // tile
  auto* tile = app.add_subcommand("tile", "split a sheet into overlapping tiles");
  std::string tileImage, tileOutDir;
  tile->add_option("--image", tileImage, "input sheet (PNG + world file)")->required();
  tile->add_option("--out-dir", tileOutDir, "tile output directory")->required();

  // stitch
  auto* stitch = app.add_subcommand("stitch", "reassemble tiles into one raster");
  std::string stitchTiling, stitchOut;
  stitch->add_option("--tiling", stitchTiling, "tiling descriptor JSON")->required();
  stitch->add_option("--out", stitchOut, "output raster (.png or .probf)")->required();

  // morph
  auto* morph = app.add_subcommand("morph", "close gaps and drop specks in a road mask");
  std::string morphMask, morphOut;
  morph->add_option("--mask", morphMask, "binary road mask PNG")->required();
  morph->add_option("--out", morphOut, "cleaned mask PNG")->required();

  // skeleton
  auto* skeleton = app.add_subcommand("skeleton", "thin a road mask to 1-px centerlines");
  std::string skeletonMask, skeletonOut;
  skeleton->add_option("--mask", skeletonMask, "binary road mask PNG")->required();
  skeleton->add_option("--out", skeletonOut, "skeleton mask PNG")->required();

  // vectorize
  auto* vectorize = app.add_subcommand("vectorize", "trace a skeleton into a polyline network");
  std::string vectorizeSkeleton, vectorizeOut;
  vectorize->add_option("--skeleton", vectorizeSkeleton, "skeleton mask PNG")->required();
  vectorize->add_option("--out", vectorizeOut, "network GeoJSON")->required();

  // gridfilter
  auto* gridfilter = app.add_subcommand("gridfilter", "remove coordinate-grid lines");
  std::string gridNetwork, gridOut, gridRemoved;
  gridfilter->add_option("--network", gridNetwork, "network GeoJSON")->required();
  gridfilter->add_option("--out", gridOut, "filtered network GeoJSON")->required();
  gridfilter->add_option("--removed", gridRemoved, "audit copy of the removed segments");

  // paint
  auto* paint = app.add_subcommand("paint", "render a network with class symbology");
  std::string paintNetwork, paintBase, paintMap, paintLabels, paintRegion, paintTruth;
  paint->add_option("--network", paintNetwork, "network GeoJSON")->required();
  paint->add_option("--base", paintBase, "base sheet PNG (blank synthetic sheet if omitted)");
  paint->add_option("--map", paintMap, "painted sheet PNG")->required();
  paint->add_option("--labels", paintLabels, "class-label raster PNG");
  paint->add_option("--region", paintRegion, "road-region mask PNG");
  paint->add_option("--truth", paintTruth, "classified truth network GeoJSON");

  // classify-baseline
  auto* classify = app.add_subcommand("classify-baseline",
                                      "template-correlation class probabilities");
  std::string classifyMap, classifyOut, classifyRoi;
  classify->add_option("--map", classifyMap, "map sheet PNG")->required();
  classify->add_option("--out", classifyOut, "probability field (.probf)")->required();
  classify->add_option("--roi", classifyRoi, "mask PNG restricting the scored pixels");

  // ensemble
  auto* ensemble = app.add_subcommand("ensemble", "average member probability fields");
  std::string ensembleDir, ensembleOut;
  ensemble->add_option("--members", ensembleDir, "directory with member_<k>.probf")->required();
  ensemble->add_option("--out", ensembleOut, "averaged field (.probf)")->required();

  // mask
  auto* mask = app.add_subcommand("mask", "force certainty outside the road region");
  std::string maskProbf, maskRegion, maskOut;
  mask->add_option("--probf", maskProbf, "probability field (.probf)")->required();
  mask->add_option("--region", maskRegion, "road-region mask PNG")->required();
  mask->add_option("--out", maskOut, "masked field (.probf)")->required();

  // assign
  auto* assign = app.add_subcommand("assign", "classify network segments from probabilities");
  std::string assignProbf, assignNetwork, assignOut, assignProfiles;
  assign->add_option("--probf", assignProbf, "probability field (.probf)")->required();
  assign->add_option("--network", assignNetwork, "network GeoJSON")->required();
  assign->add_option("--out", assignOut, "classified network GeoJSON")->required();
  assign->add_option("--profiles", assignProfiles, "per-part probability profile CSV");

  // eval
  auto* eval = app.add_subcommand("eval", "score a prediction against truth");
  std::string evalTruth, evalPred, evalReport, evalLabels, evalProbf, evalMask;
  eval->add_option("--truth", evalTruth, "classified truth network GeoJSON")->required();
  eval->add_option("--pred", evalPred, "classified predicted network GeoJSON")->required();
  eval->add_option("--report", evalReport, "metric report JSON");
  eval->add_option("--labels", evalLabels, "class-label raster PNG (enables pixel metrics)");
  eval->add_option("--probf", evalProbf, "probability field (.probf, enables pixel metrics)");
  eval->add_option("--eval-mask", evalMask, "mask PNG restricting the scored pixels");

  // pipeline
  auto* pipeline = app.add_subcommand("pipeline", "run the full chain into a directory");
  std::string pipeOutDir, pipeMap, pipeMask, pipeProbf, pipeMembers, pipeTruth, pipeEmit;
  bool pipeSynthetic = false, pipeOracle = false, pipeRender = false;
  pipeline->add_option("--out-dir", pipeOutDir, "run output directory");
  pipeline->add_flag("--synthetic", pipeSynthetic, "generate and process a synthetic sheet");
  pipeline->add_flag("--oracle", pipeOracle,
                     "synthetic only: noisy one-hot truth instead of the template classifier");
  pipeline->add_flag("--render", pipeRender, "write a colored overview image");
  pipeline->add_option("--map", pipeMap, "map sheet PNG");
  pipeline->add_option("--mask", pipeMask, "binary road mask PNG");
  pipeline->add_option("--probf", pipeProbf, "ready-made probability field (.probf)");
  pipeline->add_option("--members", pipeMembers, "ensemble member directory");
  pipeline->add_option("--truth", pipeTruth, "classified truth network for evaluation");
  pipeline->add_option("--emit-default-config", pipeEmit,
                       "write the default configuration to this path and exit");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "assignment parameter sensitivity sweep");
  std::string sweepProbf, sweepNetwork, sweepTruth, sweepOutDir;
  std::vector<double> sweepDeltas, sweepMinLens, sweepBuffers;
  sweep->add_option("--probf", sweepProbf, "probability field (.probf)")->required();
  sweep->add_option("--network", sweepNetwork, "network GeoJSON")->required();
  sweep->add_option("--truth", sweepTruth, "classified truth network GeoJSON")->required();
  sweep->add_option("--out-dir", sweepOutDir, "sweep output directory")->required();
  sweep->add_option("--delta", sweepDeltas, "part length values, m");
  sweep->add_option("--min-length", sweepMinLens, "minimum section length values, m");
  sweep->add_option("--buffer", sweepBuffers, "zonal buffer values, m");

  // render
  auto* render = app.add_subcommand("render", "color a classified network over a sheet");
  std::string renderPred, renderBase, renderOut;
  render->add_option("--pred", renderPred, "classified network GeoJSON")->required();
  render->add_option("--base", renderBase, "background sheet PNG");
  render->add_option("--out", renderOut, "rendered PNG")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad arguments are configuration errors
  }

  try {
    roadvec::PipelineConfig config = loadConfig(common);
    roadvec::StageRecorder rec = recorderFor(config, common);

    if (tile->parsed()) {
      std::cout << roadvec::stageTile(config, rec, tileImage, tileOutDir) << "\n";
    } else if (stitch->parsed()) {
      roadvec::stageStitch(config, rec, stitchTiling, stitchOut);
      std::cout << stitchOut << "\n";
    } else if (morph->parsed()) {
      roadvec::stageMorph(config, rec, morphMask, morphOut);
      std::cout << morphOut << "\n";
    } else if (skeleton->parsed()) {
      roadvec::stageSkeleton(config, rec, skeletonMask, skeletonOut);
      std::cout << skeletonOut << "\n";
    } else if (vectorize->parsed()) {
      roadvec::stageVectorize(config, rec, vectorizeSkeleton, vectorizeOut);
      std::cout << vectorizeOut << "\n";
    } else if (gridfilter->parsed()) {
      roadvec::stageGridFilter(config, rec, gridNetwork, gridOut, gridRemoved);
      std::cout << gridOut << "\n";
    } else if (paint->parsed()) {
      roadvec::stagePaint(config, rec, paintNetwork, paintBase, paintMap, paintLabels,
                          paintRegion, paintTruth);
      std::cout << paintMap << "\n";
    } else if (classify->parsed()) {
      roadvec::stageClassifyBaseline(config, rec, classifyMap, classifyOut, classifyRoi);
      std::cout << classifyOut << "\n";
    } else if (ensemble->parsed()) {
      roadvec::stageEnsemble(config, rec, ensembleDir, ensembleOut);
      std::cout << ensembleOut << "\n";
    } else if (mask->parsed()) {
      roadvec::stageMask(config, rec, maskProbf, maskRegion, maskOut);
      std::cout << maskOut << "\n";
    } else if (assign->parsed()) {
      roadvec::stageAssign(config, rec, assignProbf, assignNetwork, assignOut, assignProfiles);
      std::cout << assignOut << "\n";
    } else if (eval->parsed()) {
      std::cout << roadvec::stageEval(config, rec, evalTruth, evalPred, evalReport, evalLabels,
                                      evalProbf, evalMask);
    } else if (pipeline->parsed()) {
      if (!pipeEmit.empty()) {
        roadvec::PipelineConfig{}.save(pipeEmit);
        std::cout << pipeEmit << "\n";
        return 0;
      }
      if (pipeOutDir.empty())
        throw roadvec::ConfigError("pipeline needs --out-dir (or --emit-default-config)");
      std::string tables;
      if (pipeSynthetic) {
        tables = roadvec::runSyntheticPipeline(config, pipeOutDir, pipeOracle, pipeRender);
      } else {
        roadvec::RealPipelineInputs inputs;
        inputs.mapPath = pipeMap;
        inputs.maskPath = pipeMask;
        inputs.probfPath = pipeProbf;
        inputs.membersDir = pipeMembers;
        inputs.truthPath = pipeTruth;
        tables = roadvec::runRealPipeline(config, pipeOutDir, inputs, pipeRender);
      }
      if (!tables.empty()) std::cout << tables;
    } else if (sweep->parsed()) {
      std::cout << roadvec::runSweep(config, sweepOutDir, sweepProbf, sweepNetwork, sweepTruth,
                                     sweepDeltas, sweepMinLens, sweepBuffers)
                << "\n";
    } else if (render->parsed()) {
      roadvec::stageRender(config, rec, renderPred, renderBase, renderOut);
      std::cout << renderOut << "\n";
    }
  } catch (const roadvec::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const roadvec::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
