#pragma once

#include <cstdint>
#include <random>

namespace rulekit {

/// splitmix64 finalizer; used to spread user seeds over the engine state space.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Engine for stream `stream` of the given seed. Disjoint streams let
/// independent units of work (e.g. Monte-Carlo trials) draw concurrently
/// while staying reproducible regardless of scheduling.
inline std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream = 0) {
    return std::mt19937_64(splitmix64(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1))));
}

/// Uniform double in [0, 1) from the top 53 bits of an engine draw.
/// Unlike std::uniform_real_distribution, the result is identical across
/// standard library implementations.
inline double uniform_unit(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
    return lo + uniform_unit(gen) * (hi - lo);
}

}  // namespace rulekit
