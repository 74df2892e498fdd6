#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace roadvec {

// One line of the run log: which stage ran, on what (content hashes), under
// which config and seed, how long it took, and what it produced.
struct ManifestEntry {
  std::string stage;
  std::vector<std::pair<std::string, std::string>> inputs;  // path -> content hash
  std::string configHash;
  std::uint64_t seed = 0;
  double wallSeconds = 0.0;
  std::vector<std::string> outputs;
};

// Content hash of a file (64-bit FNV-1a over the raw bytes, hex).
std::string fileHashHex(const std::string& path);

// Appends the entry as one JSON line to the manifest file.
void appendManifest(const std::string& manifestPath, const ManifestEntry& entry);

}  // namespace roadvec
