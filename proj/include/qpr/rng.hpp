#pragma once

#include <cstdint>
#include <random>

namespace qpr {

// All randomness flows from one 64-bit seed; independent streams are derived
// by mixing the seed with a stream counter (splitmix64), so parallel batches
// stay reproducible.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(stream)));
}

}  // namespace qpr
