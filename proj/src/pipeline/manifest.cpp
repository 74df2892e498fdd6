#include "pipeline/manifest.hpp"

#include <cstdio>
#include <fstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace roadvec {

std::string fileHashHex(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot hash missing file " + path);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  std::vector<char> buf(1 << 16);
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[static_cast<std::size_t>(i)]);
      h *= 0x100000001b3ULL;
    }
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return hex;
}

void appendManifest(const std::string& manifestPath, const ManifestEntry& entry) {
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  for (const auto& [path, hash] : entry.inputs) inputs[path] = hash;
  nlohmann::ordered_json line{{"stage", entry.stage},
                              {"inputs", inputs},
                              {"config_hash", entry.configHash},
                              {"seed", entry.seed},
                              {"wall_seconds", entry.wallSeconds},
                              {"outputs", entry.outputs}};
  std::ofstream out(manifestPath, std::ios::binary | std::ios::app);
  if (!out) throw DataError("cannot append to manifest " + manifestPath);
  out << line.dump() << "\n";
}

}  // namespace roadvec
