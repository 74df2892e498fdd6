#pragma once

#include <filesystem>
#include <optional>

#include "core/network.hpp"

namespace roadvec {

// Networks travel as GeoJSON FeatureCollections of LineStrings, coordinates
// in meters. Plain segments carry property "segment_id"; classified sections
// add "road_class" (1..5) and optionally "parent_id" and "mean_probs".
// Node topology is not serialized; reads rebuild it from coordinate-equal
// endpoints. EPSG 21781 (Swiss LV03) is the default grid tag.

inline constexpr int kDefaultEpsg = 21781;

void writeNetwork(const std::filesystem::path& path, const RoadNetwork& network,
                  std::optional<int> crsEpsg = kDefaultEpsg);
RoadNetwork readNetwork(const std::filesystem::path& path);

void writeClassifiedNetwork(const std::filesystem::path& path, const ClassifiedNetwork& network,
                            std::optional<int> crsEpsg = kDefaultEpsg);
ClassifiedNetwork readClassifiedNetwork(const std::filesystem::path& path);

}  // namespace roadvec
