#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace stochdom::detail {

// Derives an independent engine seed from (seed, index); splitmix64 finaliser.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Canonical uniform in [0, 1): top 53 bits of the raw engine output.
// std::uniform_real_distribution is avoided throughout because its output
// stream is implementation-defined; this mapping is identical on every
// standard library, which keeps seeded results portable.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Variant excluding 0, for transforms that take a logarithm.
inline double uniform01_positive(std::mt19937_64& rng) {
    for (;;) {
        double u = uniform01(rng);
        if (u > 0.0) return u;
    }
}

// Uniform value in [lo, hi).
inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

// Bounded integer in [0, n) by multiply-shift reduction.
inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(rng()) * static_cast<unsigned __int128>(n)) >> 64);
}

}  // namespace stochdom::detail
