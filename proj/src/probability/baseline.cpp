#include "probability/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "core/geometry.hpp"
#include "kernels/kernels.hpp"
#include "morphology/morphology.hpp"
#include "painter/painter.hpp"
#include "tiling/tiling.hpp"

namespace roadvec {

namespace {

constexpr float kNoScore = -2.0f;  // below any correlation, so pooling ignores it

std::vector<float> toLuminance(const ByteRaster& map) {
  std::vector<float> gray(map.pixelCount());
  if (map.bandCount() == 1) {
    auto g = map.band(0);
    for (std::size_t i = 0; i < gray.size(); ++i) gray[i] = g[i] / 255.0f;
  } else {
    auto r = map.band(0), g = map.band(1), b = map.band(2);
    for (std::size_t i = 0; i < gray.size(); ++i)
      gray[i] = (0.299f * r[i] + 0.587f * g[i] + 0.114f * b[i]) / 255.0f;
  }
  return gray;
}

struct Template {
  int classIndex = 0;            // 0..4
  std::vector<float> coeffs;     // K*K, zero-mean, unit norm
};

// Separable [1 2 1]/4 smoothing with reflected borders, applied to both the
// map and the template renderings before correlation. A painted stroke lies
// up to half a rotation step from the nearest sampled template orientation;
// without smoothing that misalignment collapses the correlation of 1 px
// strokes while leaving broader symbols usable, which skews class scores.
void binomialBlur(float* data, int w, int h) {
  std::vector<float> line(static_cast<std::size_t>(std::max(w, h)));
  for (int y = 0; y < h; ++y) {
    float* d = data + static_cast<std::size_t>(y) * w;
    for (int x = 0; x < w; ++x) {
      int xl = x > 0 ? x - 1 : std::min(1, w - 1);
      int xr = x < w - 1 ? x + 1 : std::max(w - 2, 0);
      line[static_cast<std::size_t>(x)] = 0.25f * d[xl] + 0.5f * d[x] + 0.25f * d[xr];
    }
    std::copy_n(line.data(), w, d);
  }
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) {
      int yu = y > 0 ? y - 1 : std::min(1, h - 1);
      int yd = y < h - 1 ? y + 1 : std::max(h - 2, 0);
      line[static_cast<std::size_t>(y)] = 0.25f * data[static_cast<std::size_t>(yu) * w + x] +
                                          0.5f * data[static_cast<std::size_t>(y) * w + x] +
                                          0.25f * data[static_cast<std::size_t>(yd) * w + x];
    }
    for (int y = 0; y < h; ++y) data[static_cast<std::size_t>(y) * w + x] = line[y];
  }
}

// Renders one straight symbol stroke through the window center and packs it
// into a zero-mean unit-norm coefficient window. Returns false for a blank
// rendering (fully inside a dash gap).
bool renderTemplate(const SymbologySpec& spec, const ClassSymbol& symbol, double angleRad,
                    double phaseM, int K, double pixelSize, std::vector<float>& coeffs) {
  GeoTransform t{0.0, K * pixelSize, pixelSize};
  ByteRaster canvas(K, K, 3, BandSemantics::rgb, t);
  for (int b = 0; b < 3; ++b) {
    std::uint8_t v = b == 0 ? spec.background.r : (b == 1 ? spec.background.g : spec.background.b);
    std::ranges::fill(canvas.band(b), v);
  }
  double cx = K * pixelSize / 2.0, cy = K * pixelSize / 2.0;
  double ux = std::cos(angleRad), uy = std::sin(angleRad);
  double reach = K * pixelSize;
  Polyline line{{cx - ux * reach, cy - uy * reach}, {cx + ux * reach, cy + uy * reach}};
  strokeSymbol(canvas, line, symbol, spec.stroke, phaseM);

  coeffs.resize(static_cast<std::size_t>(K) * K);
  auto r = canvas.band(0), g = canvas.band(1), b = canvas.band(2);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    coeffs[i] = (0.299f * r[i] + 0.587f * g[i] + 0.114f * b[i]) / 255.0f;
  binomialBlur(coeffs.data(), K, K);
  double sum = 0.0;
  for (float c : coeffs) sum += c;
  float mean = static_cast<float>(sum / static_cast<double>(coeffs.size()));
  double sq = 0.0;
  for (float& c : coeffs) {
    c -= mean;
    sq += static_cast<double>(c) * c;
  }
  if (sq < 1e-12) return false;
  float inv = static_cast<float>(1.0 / std::sqrt(sq));
  for (float& c : coeffs) c *= inv;
  return true;
}

std::vector<Template> buildTemplates(const SymbologySpec& spec, const BaselineParams& params,
                                     int K, double pixelSize) {
  std::vector<Template> templates;
  int rotations = static_cast<int>(std::lround(180.0 / params.rotationStepDeg));
  for (int cls = 0; cls < kRoadClassCount; ++cls) {
    const ClassSymbol& sym = spec.classes[static_cast<std::size_t>(cls)];
    int phases = sym.dashed() ? params.dashPhaseVariants : 1;
    double periodM = (sym.dashOnPx + sym.dashOffPx) * pixelSize;
    // Double-line symbols are painted with per-segment gap jitter, so each
    // class also matches against narrowed and widened renderings. The
    // variants stay strictly inside the class's own jitter range; that keeps
    // the decision boundary between two gap-adjacent classes at the midpoint
    // instead of handing boundary cases to whichever class ties first.
    std::vector<double> gapOffsets{0.0};
    if (sym.lineCount == 2 && sym.gapJitterPx > 0.0) {
      gapOffsets = {-2.0 * sym.gapJitterPx / 3.0, 0.0, 2.0 * sym.gapJitterPx / 3.0};
    }
    // A double symbol with only one side dashed is not mirror symmetric:
    // flipping the travel direction puts the dashed stroke on the other side
    // of the solid one, which no dash phase shift can reproduce. Such symbols
    // get the full circle of orientations, symmetric ones only half.
    bool sideAsymmetric = sym.lineCount == 2 && sym.dashSecondLineOnly;
    int orientations = sideAsymmetric ? 2 * rotations : rotations;
    for (double gapOffset : gapOffsets) {
      ClassSymbol variant = sym;
      variant.gapPx = sym.gapPx + gapOffset;
      for (int rot = 0; rot < orientations; ++rot) {
        double angle = rot * params.rotationStepDeg * std::numbers::pi / 180.0;
        for (int ph = 0; ph < phases; ++ph) {
          // Shifts the dash pattern so the window center samples `phases`
          // distinct points of the on/off cycle.
          double phaseM = sym.dashed() ? K * pixelSize - ph * periodM / phases : 0.0;
          Template t;
          t.classIndex = cls;
          if (renderTemplate(spec, variant, angle, phaseM, K, pixelSize, t.coeffs))
            templates.push_back(std::move(t));
        }
      }
    }
  }
  if (templates.empty()) throw ConfigError("baselineClassifier: every template rendered blank");
  return templates;
}

// One 3x3 float dilation of a full band, horizontal then vertical pass.
void poolOnce(FloatRaster& band, FloatRaster& scratch) {
  int w = band.width(), h = band.height();
  for (int y = 0; y < h; ++y)
    kernels::rowMax3F32(band.band(0).data() + static_cast<std::size_t>(y) * w,
                        scratch.band(0).data() + static_cast<std::size_t>(y) * w,
                        static_cast<std::size_t>(w), kNoScore);
  for (int y = 0; y < h; ++y) {
    const float* mid = scratch.band(0).data() + static_cast<std::size_t>(y) * w;
    const float* up = y > 0 ? mid - w : mid;
    const float* down = y + 1 < h ? mid + w : mid;
    kernels::max3F32(up, mid, down, band.band(0).data() + static_cast<std::size_t>(y) * w,
                     static_cast<std::size_t>(w));
  }
}

}  // namespace

void BaselineParams::validate() const {
  if (temperature <= 0.0) throw ConfigError("baseline temperature must be positive");
  if (windowSize != 0 && (windowSize < 3 || windowSize % 2 == 0))
    throw ConfigError("baseline window size must be 0 (auto) or an odd number >= 3");
  if (rotationStepDeg <= 0.0 || rotationStepDeg > 180.0 ||
      std::abs(180.0 / rotationStepDeg - std::lround(180.0 / rotationStepDeg)) > 1e-9)
    throw ConfigError("baseline rotation step must divide 180 degrees");
  if (dashPhaseVariants < 1) throw ConfigError("baseline needs at least one dash phase");
  if (displacementRadius < 0) throw ConfigError("baseline displacement radius must be >= 0");
}

ProbabilityField baselineClassifier(const ByteRaster& map, const SymbologySpec& spec,
                                    const BaselineParams& params, const ByteRaster* roi) {
  params.validate();
  spec.validate();
  if (map.bandCount() != 1 && map.bandCount() != 3)
    throw DataError("baselineClassifier: map must be gray or rgb");

  int K = params.windowSize;
  if (K == 0) {
    double widest = 0.0;
    for (const ClassSymbol& sym : spec.classes)
      widest = std::max(widest, sym.maxRenderedWidthPx());
    // Wide enough that a window centered on one stroke of the widest double
    // symbol still contains the other stroke; a narrower window sees a
    // single-line class there instead.
    K = 2 * static_cast<int>(std::ceil(widest)) - 1;
    if (K % 2 == 0) ++K;
    K = std::max(K, 3);
  }
  const int R = K / 2;
  const int W = map.width(), H = map.height();
  const std::size_t N = static_cast<std::size_t>(K) * K;

  ByteRaster scoreRegion(W, H, 1, BandSemantics::binaryMask, map.transform(), 1);
  if (roi) {
    requireBinaryMask(*roi, "baselineClassifier roi");
    if (!roi->sameGrid(map)) throw DataError("baselineClassifier: roi grid differs from map");
    scoreRegion = *roi;
    for (int i = 0; i < params.displacementRadius; ++i) scoreRegion = dilate3x3(scoreRegion);
  }

  std::vector<float> gray = toLuminance(map);
  binomialBlur(gray.data(), W, H);
  const int Wp = W + 2 * R;
  std::vector<float> padded(static_cast<std::size_t>(Wp) * (H + 2 * R));
  for (int py = 0; py < H + 2 * R; ++py) {
    int sy = reflectIndex(py - R, H);
    float* dst = padded.data() + static_cast<std::size_t>(py) * Wp;
    const float* srcRow = gray.data() + static_cast<std::size_t>(sy) * W;
    for (int px = 0; px < Wp; ++px) dst[px] = srcRow[reflectIndex(px - R, W)];
  }

  std::vector<Template> templates =
      buildTemplates(spec, params, K, map.transform().pixelSize);

  ProbabilityField out(W, H, map.transform());
  for (int b = 0; b < kRoadClassCount; ++b)
    std::ranges::fill(out.band(b), kNoScore);

  auto region = scoreRegion.band(0);
  std::vector<float> window(N);
  for (int y = 0; y < H; ++y) {
    for (int x = 0; x < W; ++x) {
      std::size_t idx = static_cast<std::size_t>(y) * W + x;
      if (region[idx] == 0) continue;
      for (int dy = 0; dy < K; ++dy)
        std::copy_n(padded.data() + static_cast<std::size_t>(y + dy) * Wp + x, K,
                    window.data() + static_cast<std::size_t>(dy) * K);
      double s1 = kernels::sumF32(window.data(), N);
      float mean = static_cast<float>(s1 / static_cast<double>(N));
      double varNum = kernels::sumSqDiffF32(window.data(), mean, N);
      float scores[kRoadClassCount] = {0, 0, 0, 0, 0};
      if (varNum >= 1e-9) {
        double invDen = 1.0 / std::sqrt(varNum);
        for (int c = 0; c < kRoadClassCount; ++c) scores[c] = -1.0f;
        for (const Template& t : templates) {
          // Template coefficients are zero-mean, so the raw window works as
          // the correlation numerator without subtracting the window mean.
          float s = static_cast<float>(kernels::dotF32(window.data(), t.coeffs.data(), N) *
                                       invDen);
          scores[t.classIndex] = std::max(scores[t.classIndex], s);
        }
      }
      for (int c = 0; c < kRoadClassCount; ++c) out.band(c)[idx] = scores[c];
    }
  }

  if (params.displacementRadius > 0) {
    FloatRaster scratch(W, H, 1, BandSemantics::gray);
    for (int c = 0; c < kRoadClassCount; ++c) {
      FloatRaster view(W, H, 1, BandSemantics::gray);
      std::ranges::copy(out.band(c), view.band(0).begin());
      for (int i = 0; i < params.displacementRadius; ++i) poolOnce(view, scratch);
      std::ranges::copy(view.band(0), out.band(c).begin());
    }
  }

  const float invTau = static_cast<float>(1.0 / params.temperature);
  float* bands[kRoadClassCount];
  for (int c = 0; c < kRoadClassCount; ++c) bands[c] = out.band(c).data();
  for (std::size_t i = 0; i < out.pixelCount(); ++i) {
    float best = bands[0][i];
    for (int c = 1; c < kRoadClassCount; ++c) best = std::max(best, bands[c][i]);
    double sum = 0.0;
    for (int c = 0; c < kRoadClassCount; ++c) {
      float e = std::exp((bands[c][i] - best) * invTau);
      bands[c][i] = e;
      sum += e;
    }
    float inv = static_cast<float>(1.0 / sum);
    for (int c = 0; c < kRoadClassCount; ++c) bands[c][i] *= inv;
  }
  return out;
}

}  // namespace roadvec
