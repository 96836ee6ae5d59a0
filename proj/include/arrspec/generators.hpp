#pragma once

/**
 * @file generators.hpp
 * @brief Named desk-scale arrangements.
 */

#include <arrspec/arrangement.hpp>
#include <arrspec/random.hpp>

#include <string>
#include <vector>

namespace arrspec::gen {

inline constexpr std::size_t kMaxDim = 5;
inline constexpr std::size_t kMaxRandomHyperplanes = 10;
inline constexpr std::size_t kMaxBraid = 6;

namespace detail {
inline RationalVector ints(std::initializer_list<long> xs) {
    RationalVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}
} // namespace detail

/// Coordinate hyperplanes x_i = 0 in Q^dim.
inline Arrangement boolean(std::size_t dim) {
    if (dim == 0 || dim > kMaxDim)
        throw Error(ErrorKind::DeskScaleExceeded, "boolean arrangement needs 1 <= dim <= " + std::to_string(kMaxDim));
    std::vector<RationalVector> normals;
    for (std::size_t i = 0; i < dim; ++i) {
        RationalVector e(dim);
        e[i] = 1;
        normals.push_back(std::move(e));
    }
    return build(dim, std::move(normals));
}

/// x_i - x_j (i < j) in Q^m, essentialized to rank m - 1.
inline Arrangement braid(std::size_t m) {
    if (m < 2 || m > kMaxBraid)
        throw Error(ErrorKind::DeskScaleExceeded, "braid arrangement needs 2 <= m <= " + std::to_string(kMaxBraid));
    std::vector<RationalVector> normals;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            RationalVector v(m);
            v[i] = 1;
            v[j] = -1;
            normals.push_back(std::move(v));
        }
    return essentialize(m, std::move(normals));
}

/// f_1 = x, f_2 = y, f_3 = x - y.
inline Arrangement three_lines() {
    return build(2, {detail::ints({1, 0}), detail::ints({0, 1}), detail::ints({1, -1})});
}

/// A single point in a line.
inline Arrangement point_on_line() { return build(1, {detail::ints({1})}); }

/// Small-integer normals in [-3, 3]^dim; parallel draws and non-essential
/// outcomes are rejected and redrawn.
inline Arrangement random(std::size_t dim, std::size_t n, std::uint64_t seed) {
    if (dim == 0 || dim > kMaxDim || n > kMaxRandomHyperplanes)
        throw Error(ErrorKind::DeskScaleExceeded, "random arrangement needs 1 <= dim <= " + std::to_string(kMaxDim) +
                                                      " and n <= " + std::to_string(kMaxRandomHyperplanes));
    if (n < dim) throw Error(ErrorKind::NotEssential, "fewer hyperplanes than dimensions cannot be essential");
    if (dim == 1 && n > 1) throw Error(ErrorKind::InvalidInput, "a line carries only one distinct hyperplane");
    Rng rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<RationalVector> normals;
        int draws = 0;
        while (normals.size() < n && draws < 10000) {
            ++draws;
            RationalVector v(dim);
            for (auto& x : v) x = uniform_int(rng, -3, 3);
            if (is_zero(v)) continue;
            bool dup = false;
            for (const auto& u : normals) dup = dup || arrspec::detail::parallel(u, v);
            if (!dup) normals.push_back(std::move(v));
        }
        if (normals.size() == n && rank(RatMatrix::from_rows(normals, dim)) == dim) return build(dim, std::move(normals));
    }
    throw Error(ErrorKind::InvalidInput, "could not draw an essential arrangement");
}

} // namespace arrspec::gen
