#pragma once

// Portable draws on top of mt19937_64. The standard distributions are
// implementation-defined, so seeded output would differ between standard
// libraries if we used them.

#include <cstdint>
#include <random>

namespace pcf::detail {

using Rng = std::mt19937_64;

/// Uniform in [0, bound), bound > 0, by rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound)
{
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

/// Uniform in [0, 1) with 53 random bits.
inline double unit_real(Rng& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace pcf::detail
