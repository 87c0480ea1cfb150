#pragma once

#include <cstdint>
#include <random>

namespace qvp {

/// Uniform draw in [0, bound) from raw engine output. Standard-library
/// distributions are implementation-defined, so seeded outputs would differ
/// between toolchains; this stays bit-identical everywhere.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v = rng();
    while (v >= limit) v = rng();
    return v % bound;
}

/// True with probability num/den.
inline bool draw_bernoulli(std::mt19937_64& rng, std::uint64_t num, std::uint64_t den) {
    return draw_below(rng, den) < num;
}

}  // namespace qvp
