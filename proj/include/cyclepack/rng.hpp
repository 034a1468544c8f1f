#pragma once

// Seeded randomness helpers. mt19937_64 output is pinned by the standard;
// the distribution adapters here are hand-rolled so the same seed yields the
// same bytes on every toolchain (std::uniform_int_distribution is not
// portable across standard libraries).

#include <cstdint>
#include <random>
#include <vector>

namespace cyclepack {

using Rng = std::mt19937_64;

// uniform in [0, n), rejection-sampled
inline std::uint64_t rng_below(Rng& rng, std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t limit = ~0ULL - (~0ULL % n);
    for (;;) {
        std::uint64_t x = rng();
        if (x < limit) return x % n;
    }
}

// uniform in [0, 1) with 53 bits
inline double rng_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline bool rng_chance(Rng& rng, double p) { return rng_unit(rng) < p; }

template <typename T>
void rng_shuffle(Rng& rng, std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng_below(rng, i)]);
}

}  // namespace cyclepack
