#pragma once

// Counter-based uniform variates: coordinate j of point i is a pure function
// of (seed, i, j), so parallel generation by index matches sequential output
// bit for bit.

#include <cstdint>

namespace ppc {

/// SplitMix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t i, std::uint64_t j) {
    std::uint64_t key = seed;
    key += 0x9E3779B97F4A7C15ull * (i + 1);
    key = mix64(key);
    key += 0xD1B54A32D192ED03ull * (j + 1);
    return mix64(mix64(key));
}

/// Uniform double in [0,1), 53 random bits.
inline double uniform01(std::uint64_t seed, std::uint64_t i, std::uint64_t j) {
    return static_cast<double>(counter_hash(seed, i, j) >> 11) * 0x1.0p-53;
}

}  // namespace ppc
