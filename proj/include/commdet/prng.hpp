#pragma once

#include "commdet/dense_matrix.hpp"

#include <cstdint>

namespace commdet {

/// SplitMix64: tiny, seedable, identical output on every platform, which
/// keeps seeded property suites and JSON reports byte-reproducible.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [lo, hi] inclusive.
    int range(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Complex unit_square() { return Complex(2.0 * real() - 1.0, 2.0 * real() - 1.0); }
};

} // namespace commdet
