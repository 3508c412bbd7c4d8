#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace misrec {

// Seeded randomness helpers. std::uniform_*_distribution is
// implementation-defined, so experiments that must reproduce byte-identical
// output across toolchains use these instead.

// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool coin(std::mt19937_64& rng, double p) {
    return unit_double(rng) < p;
}

// Uniform integer in [0, bound) by rejection.
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = uniform_index(rng, i);
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace misrec
