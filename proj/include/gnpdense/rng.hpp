#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace gnpdense {

/**
 * Deterministic randomness used everywhere in this project.
 *
 * All random draws come from std::mt19937_64, whose algorithm is fixed by
 * the C++ standard, so identical seeds give identical streams on every
 * platform. The draw rules below are part of the file-format / reproducibility
 * contract and must never change:
 *
 *  - unit_draw:    u = (x >> 11) * 2^-53 with x the next 64-bit engine output;
 *                  u is uniform on [0,1) with 53 random bits.
 *  - bounded_draw: rejection sampling; accept x >= 2^64 mod bound, return
 *                  x % bound (unbiased).
 *  - fisher_yates: for j = n-1 down to 1, swap a[j] with a[bounded_draw(j+1)].
 *  - splitmix64_at(seed, i): the (i+1)-th output of SplitMix64 seeded with
 *                  `seed`; used to derive independent sub-seeds.
 */

inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline double unit_draw(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline std::uint64_t bounded_draw(std::mt19937_64& eng, std::uint64_t bound) {
    // reject the low sliver so that x % bound is exactly uniform
    const std::uint64_t reject_below = (0 - bound) % bound;  // 2^64 mod bound
    std::uint64_t x = eng();
    while (x < reject_below) x = eng();
    return x % bound;
}

template <typename T>
void fisher_yates(std::vector<T>& values, std::mt19937_64& eng) {
    for (std::size_t j = values.size(); j > 1; --j) {
        const std::uint64_t i = bounded_draw(eng, j);
        std::swap(values[i], values[j - 1]);
    }
}

}  // namespace gnpdense
