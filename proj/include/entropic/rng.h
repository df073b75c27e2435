#pragma once

#include <cstdint>
#include <random>

namespace entropic {

using Rng = std::mt19937_64;

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Independent substream for trial `index` of a campaign seeded with `seed`.
// Depends only on (seed, index), so trials can be evaluated in any order.
inline Rng trial_rng(uint64_t seed, uint64_t index) {
    return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632BE59BD9B4E019ULL)));
}

}  // namespace entropic
