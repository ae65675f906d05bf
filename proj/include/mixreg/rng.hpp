#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace mixreg::rng {

// Counter-based stream built on the SplitMix64 finalizer: sample k of stream
// `seed` mixes seed + (k+1)*golden-gamma. Stateless, random access, and the
// basis of the library-wide determinism contract (equal seeds => bit-identical
// draws within a build).
inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t at(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + (counter + 1) * kGoldenGamma;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Uniform in (0, 1]; the +1 keeps log() finite in the Box-Muller transform.
inline double uniform01(std::uint64_t seed, std::uint64_t counter) {
    return static_cast<double>((at(seed, counter) >> 11) + 1) * 0x1.0p-53;
}

inline double uniform(std::uint64_t seed, std::uint64_t counter, double lo, double hi) {
    return lo + (hi - lo) * uniform01(seed, counter);
}

// Standard normal via Box-Muller (cosine branch); consumes counters 2k, 2k+1.
inline double gaussian(std::uint64_t seed, std::uint64_t counter) {
    const double u1 = uniform01(seed, 2 * counter);
    const double u2 = uniform01(seed, 2 * counter + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace mixreg::rng
