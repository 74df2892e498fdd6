#pragma once

#include <cstdint>
#include <string_view>

namespace roadvec {

// SplitMix64 stream. Chosen over <random> engines so that seeded outputs are
// identical across compilers and platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Unbiased draw in [0, bound) via rejection.
  std::uint64_t uniformInt(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  // Uniform in [0, 1) with 53 bits of precision.
  double uniformReal() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniformRange(double lo, double hi) { return lo + (hi - lo) * uniformReal(); }

 private:
  std::uint64_t state_;
};

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Deterministic per-item sub-seed, used to make per-segment randomization
// independent of processing order.
inline std::uint64_t subSeed(std::uint64_t seed, std::string_view itemId) {
  return seed ^ fnv1a64(itemId);
}

}  // namespace roadvec
