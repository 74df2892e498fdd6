#include "evaluation/report.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace roadvec {

namespace {

using json = nlohmann::ordered_json;

json optionalScore(const std::optional<double>& v) {
  if (!v) return nullptr;
  return *v;
}

std::string formatScore(const std::optional<double>& v) {
  if (!v) return "   -  ";
  char buf[16];
  std::snprintf(buf, sizeof buf, "%6.4f", *v);
  return buf;
}

}  // namespace

std::string lineMetricsJson(const LineMetricReport& report) {
  json classes = json::array();
  for (int c = 0; c < kRoadClassCount; ++c) {
    const ClassLineScores& s = report.perClass[static_cast<std::size_t>(c)];
    classes.push_back({{"road_class", c + 1},
                       {"gt_length_m", s.gtLength},
                       {"pred_length_m", s.predLength},
                       {"completeness", optionalScore(s.completeness)},
                       {"correctness", optionalScore(s.correctness)}});
  }
  json doc{{"buffer_m", report.buffer},
           {"classes", classes},
           {"weighted",
            {{"completeness", optionalScore(report.weightedCompleteness)},
             {"correctness", optionalScore(report.weightedCorrectness)}}}};
  return doc.dump(2);
}

std::string pixelMetricsJson(const MetricSet& m) {
  json perClass = json::array();
  for (int b = 0; b < kProbabilityBands; ++b) {
    perClass.push_back({{"band", b < kRoadClassCount ? "class" + std::to_string(b + 1) : "no_road"},
                        {"support", m.support(b)},
                        {"precision", m.precision(b)},
                        {"recall", m.recall(b)},
                        {"f1", m.f1(b)}});
  }
  json confusion = json::array();
  for (const auto& row : m.confusion) confusion.push_back(row);
  json doc{{"pixel_count", m.pixelCount}, {"accuracy", m.accuracy},
           {"macro_precision", m.macroPrecision}, {"macro_recall", m.macroRecall},
           {"macro_f1", m.macroF1},     {"iou", m.iou},
           {"brier", m.brier},          {"per_class", perClass},
           {"confusion", confusion}};
  return doc.dump(2);
}

std::string lineMetricsTable(const LineMetricReport& report) {
  std::string out = "class      gt_m      pred_m  complete  correct\n";
  char buf[96];
  for (int c = 0; c < kRoadClassCount; ++c) {
    const ClassLineScores& s = report.perClass[static_cast<std::size_t>(c)];
    std::snprintf(buf, sizeof buf, "%5d %9.1f %11.1f    %s   %s\n", c + 1, s.gtLength,
                  s.predLength, formatScore(s.completeness).c_str(),
                  formatScore(s.correctness).c_str());
    out += buf;
  }
  std::snprintf(buf, sizeof buf, "%-5s %9s %11s    %s   %s\n", "wtd", "", "",
                formatScore(report.weightedCompleteness).c_str(),
                formatScore(report.weightedCorrectness).c_str());
  out += buf;
  return out;
}

std::string pixelMetricsTable(const MetricSet& m) {
  char buf[160];
  std::string out = "band     support  precision  recall      f1\n";
  for (int b = 0; b < kProbabilityBands; ++b) {
    std::string name = b < kRoadClassCount ? "class" + std::to_string(b + 1) : "no_road";
    std::snprintf(buf, sizeof buf, "%-7s %8zu     %6.4f  %6.4f  %6.4f\n", name.c_str(),
                  m.support(b), m.precision(b), m.recall(b), m.f1(b));
    out += buf;
  }
  std::snprintf(buf, sizeof buf,
                "accuracy %.4f  macro_p %.4f  macro_r %.4f  macro_f1 %.4f  iou %.4f  brier %.4f\n",
                m.accuracy, m.macroPrecision, m.macroRecall, m.macroF1, m.iou, m.brier);
  out += buf;
  return out;
}

}  // namespace roadvec
