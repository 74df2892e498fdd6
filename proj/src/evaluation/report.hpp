#pragma once

#include <string>

#include "evaluation/line_metrics.hpp"
#include "evaluation/pixel_metrics.hpp"

namespace roadvec {

// JSON renderings of the metric structs (undefined scores become null).
std::string lineMetricsJson(const LineMetricReport& report);
std::string pixelMetricsJson(const MetricSet& metrics);

// Fixed-width console tables: one row per road class plus the weighted row.
std::string lineMetricsTable(const LineMetricReport& report);
std::string pixelMetricsTable(const MetricSet& metrics);

}  // namespace roadvec
