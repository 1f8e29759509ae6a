#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace tgraph {

// Random streams are std::mt19937_64 engines. Independent streams are split
// off a master seed by running SplitMix64 over (seed, stream index), so a run
// is reproducible from its seed regardless of how work is scheduled.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64 seeded by splitmix64(seed, stream)";

using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline Rng make_stream(std::uint64_t seed, std::uint64_t stream) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL)));
}

/// Uniform double in [0,1) from the top 53 bits of one engine output.
/// Spelled out so the sequence does not depend on the standard library.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace tgraph
