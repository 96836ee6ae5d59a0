#pragma once

/**
 * @file arrangement.hpp
 * @brief Central essential arrangements of linear hyperplanes in Q^dim.
 */

#include <arrspec/matrix.hpp>

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace arrspec {

/// Set of hyperplane indices (n <= 64).
class IndexSet {
public:
    constexpr IndexSet() = default;
    constexpr explicit IndexSet(std::uint64_t mask) : mask_(mask) {}

    static IndexSet of(const std::vector<std::size_t>& indices) {
        IndexSet s;
        for (auto i : indices) s.insert(i);
        return s;
    }

    constexpr void insert(std::size_t i) { mask_ |= std::uint64_t{1} << i; }
    constexpr bool contains(std::size_t i) const { return (mask_ >> i) & 1U; }
    constexpr bool includes(IndexSet other) const { return (mask_ & other.mask_) == other.mask_; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr std::uint64_t mask() const { return mask_; }

    std::vector<std::size_t> to_vector() const {
        std::vector<std::size_t> out;
        for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        return out;
    }

    constexpr auto operator<=>(const IndexSet&) const = default;

private:
    std::uint64_t mask_ = 0;
};

inline constexpr std::size_t kMaxHyperplanes = 64;

/// Hyperplane H_i = {x : normals[i]·x = 0}; the positive side is normals[i]·x > 0.
class Arrangement {
public:
    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return normals_.size(); }
    const std::vector<RationalVector>& normals() const noexcept { return normals_; }
    const RationalVector& normal(std::size_t i) const { return normals_[i]; }

    /// Rank of the normals indexed by `set`.
    std::size_t rank_of(IndexSet set) const {
        std::vector<RationalVector> rows;
        for (auto i : set.to_vector()) rows.push_back(normals_[i]);
        return rows.empty() ? 0 : rank(RatMatrix::from_rows(rows, dim_));
    }

    bool operator==(const Arrangement&) const = default;

    friend Arrangement build(std::size_t dim, std::vector<RationalVector> normals);

private:
    std::size_t dim_ = 0;
    std::vector<RationalVector> normals_;
};

namespace detail {

inline bool parallel(const RationalVector& a, const RationalVector& b) {
    return proportional(a, b) && proportional(b, a);
}

inline void check_normals(std::size_t dim, const std::vector<RationalVector>& normals) {
    if (dim == 0) throw Error(ErrorKind::InvalidInput, "ambient dimension must be positive");
    if (normals.size() > kMaxHyperplanes)
        throw Error(ErrorKind::InvalidInput, "at most " + std::to_string(kMaxHyperplanes) + " hyperplanes supported");
    for (std::size_t i = 0; i < normals.size(); ++i) {
        if (normals[i].size() != dim)
            throw Error(ErrorKind::InvalidInput, "normal " + std::to_string(i) + " has wrong length");
        if (is_zero(normals[i])) throw Error(ErrorKind::ZeroNormal, "normal " + std::to_string(i) + " is zero");
    }
    for (std::size_t i = 0; i < normals.size(); ++i)
        for (std::size_t j = i + 1; j < normals.size(); ++j)
            if (parallel(normals[i], normals[j]))
                throw Error(ErrorKind::DuplicateHyperplane,
                            "normals " + std::to_string(i) + " and " + std::to_string(j) + " define the same hyperplane");
}

} // namespace detail

/// Validates and wraps the normals. Throws NotEssential when the normals do
/// not span Q^dim; use essentialize() for such inputs.
inline Arrangement build(std::size_t dim, std::vector<RationalVector> normals) {
    detail::check_normals(dim, normals);
    const std::size_t r = normals.empty() ? 0 : rank(RatMatrix::from_rows(normals, dim));
    if (r != dim)
        throw Error(ErrorKind::NotEssential, "normals span a space of dimension " + std::to_string(r) + " < " +
                                                 std::to_string(dim) + "; call essentialize() first");
    Arrangement a;
    a.dim_ = dim;
    a.normals_ = std::move(normals);
    return a;
}

/**
 * Re-expresses the normals in coordinates of a basis of their span, namely
 * the first linearly independent normals in input order. The map
 * x -> (u_j·x)_j is onto Q^r, so sign vectors (hence faces and flats) are
 * unchanged. Essential input comes back untouched.
 */
inline Arrangement essentialize(std::size_t dim, std::vector<RationalVector> normals) {
    detail::check_normals(dim, normals);
    if (normals.empty()) throw Error(ErrorKind::NotEssential, "an empty arrangement has no essential form");
    const std::size_t r = rank(RatMatrix::from_rows(normals, dim));
    if (r == dim) return build(dim, std::move(normals));

    std::vector<RationalVector> basis;
    for (const auto& n : normals) {
        basis.push_back(n);
        if (rank(RatMatrix::from_rows(basis, dim)) < basis.size()) basis.pop_back();
        if (basis.size() == r) break;
    }
    // Solve basis^T c = n for each normal: the nullspace of [basis^T | -n]
    // has a vector with last coordinate 1.
    std::vector<RationalVector> coords;
    for (const auto& n : normals) {
        RatMatrix sys(dim, r + 1);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < r; ++j) sys(i, j) = basis[j][i];
            sys(i, r) = -n[i];
        }
        auto ns = nullspace(sys);
        RationalVector c(r);
        bool found = false;
        for (const auto& v : ns)
            if (v[r] != 0) {
                for (std::size_t j = 0; j < r; ++j) c[j] = v[j] / v[r];
                found = true;
                break;
            }
        if (!found) throw Error(ErrorKind::InvalidInput, "normal outside the span of the chosen basis");
        coords.push_back(std::move(c));
    }
    return build(r, std::move(coords));
}

} // namespace arrspec
