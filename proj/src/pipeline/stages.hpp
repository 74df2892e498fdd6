#pragma once

#include <string>
#include <vector>

#include "core/raster.hpp"
#include "pipeline/config.hpp"

namespace roadvec {

// Writes one manifest line per executed stage; disabled when manifestPath is
// empty. Stages hash their file inputs before reading them.
struct StageRecorder {
  std::string manifestPath;
  std::string configHash;
  std::uint64_t seed = 0;

  void record(const std::string& stage, const std::vector<std::string>& inputs,
              const std::vector<std::string>& outputs, double wallSeconds) const;
};

// On-disk conventions for single-band rasters: masks are 0/255 gray PNGs
// ({0,1} in memory), label rasters store the raw class values 0..5.
ByteRaster readMaskPng(const std::string& path);
void writeMaskPng(const std::string& path, const ByteRaster& mask);
ByteRaster readLabelsPng(const std::string& path);
void writeLabelsPng(const std::string& path, const ByteRaster& labels);

// Stage runners shared by the CLI subcommands and the pipeline driver. Each
// loads its inputs, validates, writes its outputs, and records a manifest
// line. Paths documented as optional may be empty strings.

// Splits the sheet into overlapping tiles `<sheet>_<row>_<col>.png` plus a
// `<sheet>_tiling.json` descriptor; returns the descriptor path.
std::string stageTile(const PipelineConfig& config, const StageRecorder& rec,
                      const std::string& imagePath, const std::string& outDir);

// Reassembles tiles listed by a tiling descriptor. Tiles may be .png or
// .probf (probability fields); the output format follows the tiles.
void stageStitch(const PipelineConfig& config, const StageRecorder& rec,
                 const std::string& tilingJsonPath, const std::string& outPath);

// Morphological cleanup of a binary road mask: closing, then small-component
// removal.
void stageMorph(const PipelineConfig& config, const StageRecorder& rec,
                const std::string& maskPath, const std::string& outPath);

void stageSkeleton(const PipelineConfig& config, const StageRecorder& rec,
                   const std::string& maskPath, const std::string& outPath);

// Skeleton raster -> simplified GeoJSON network.
void stageVectorize(const PipelineConfig& config, const StageRecorder& rec,
                    const std::string& skeletonPath, const std::string& outPath);

// Removes coordinate-grid lines; removedPath (optional) gets the audit copy.
void stageGridFilter(const PipelineConfig& config, const StageRecorder& rec,
                     const std::string& networkPath, const std::string& keptPath,
                     const std::string& removedPath);

// Paints a network onto basePath (or a blank synthetic sheet when empty) with
// random per-segment classes; writes map, labels, region mask, and the truth
// classified network.
void stagePaint(const PipelineConfig& config, const StageRecorder& rec,
                const std::string& networkPath, const std::string& basePath,
                const std::string& mapPath, const std::string& labelsPath,
                const std::string& regionPath, const std::string& truthPath);

// Template-correlation probabilities for one raster; roiPath (optional)
// restricts scoring to a mask's surroundings.
void stageClassifyBaseline(const PipelineConfig& config, const StageRecorder& rec,
                           const std::string& mapPath, const std::string& outPath,
                           const std::string& roiPath);

// Averages membersDir/member_<k>.probf (k = 1..K, streamed in order).
void stageEnsemble(const PipelineConfig& config, const StageRecorder& rec,
                   const std::string& membersDir, const std::string& outPath);

void stageMask(const PipelineConfig& config, const StageRecorder& rec,
               const std::string& probfPath, const std::string& regionPath,
               const std::string& outPath);

// Classifies a network against a probability field; profilesPath (optional)
// dumps the per-part zonal profiles as CSV.
void stageAssign(const PipelineConfig& config, const StageRecorder& rec,
                 const std::string& probfPath, const std::string& networkPath,
                 const std::string& outPath, const std::string& profilesPath);

// Line metrics of pred vs truth; adds pixel metrics when labelsPath and
// probfPath are both given (evalMaskPath further restricts them). Writes the
// JSON report and returns the printable tables.
std::string stageEval(const PipelineConfig& config, const StageRecorder& rec,
                      const std::string& truthPath, const std::string& predPath,
                      const std::string& reportPath, const std::string& labelsPath,
                      const std::string& probfPath, const std::string& evalMaskPath);

// Grayscale base (white when basePath is empty) with sections colored
// class 1 = blue, 2 = green, 3 = purple, 4 = orange, 5 = red.
void stageRender(const PipelineConfig& config, const StageRecorder& rec,
                 const std::string& predPath, const std::string& basePath,
                 const std::string& outPath);

// End-to-end synthetic run into outDir: fixture, paint, tile, per-tile
// probabilities (baseline, or noisy oracle when oracle=true), stitch,
// ensemble, geometry chain from the noised region mask, hard mask, assign,
// eval, optional render. Returns the eval tables.
std::string runSyntheticPipeline(const PipelineConfig& config, const std::string& outDir,
                                 bool oracle, bool render);

// Inputs of a non-synthetic pipeline run; mask and either probf or
// membersDir are required, truth enables evaluation.
struct RealPipelineInputs {
  std::string mapPath;      // needed when probabilities come from the baseline
  std::string maskPath;     // binary road mask
  std::string probfPath;    // ready-made probability field
  std::string membersDir;   // ensemble member directory (member_<k>.probf)
  std::string truthPath;    // classified truth network for eval
};

std::string runRealPipeline(const PipelineConfig& config, const std::string& outDir,
                            const RealPipelineInputs& inputs, bool render);

// One-at-a-time sensitivity sweep over assignment parameters; each list
// varies around the config defaults, duplicates collapse. Returns the CSV
// path. Cells are cached as JSON files keyed by the config hash, so an
// interrupted sweep resumes where it stopped.
std::string runSweep(const PipelineConfig& config, const std::string& outDir,
                     const std::string& probfPath, const std::string& networkPath,
                     const std::string& truthPath, const std::vector<double>& partLengths,
                     const std::vector<double>& minSectionLengths,
                     const std::vector<double>& zonalBuffers);

}  // namespace roadvec
