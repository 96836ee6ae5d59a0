#pragma once

/**
 * @file random.hpp
 * @brief Portable seeded randomness.
 *
 * std::mt19937_64 has a fully specified output sequence; the standard
 * distributions do not, so bounded draws are done here by rejection on the
 * raw 64-bit output.
 */

#include <cstdint>
#include <limits>
#include <random>

namespace arrspec {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound), bound > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        const std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

/// Uniform integer in [lo, hi].
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

} // namespace arrspec
