#pragma once

// Slow, independent reference computations the library results are compared to.

#include <arrspec/arrspec.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using namespace arrspec;

// u is a nonzero multiple of v (or both are zero).
inline bool proportional(const RationalVector& u, const RationalVector& v) {
    if (u.size() != v.size()) return false;
    std::optional<Rational> scale;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if ((u[i] == 0) != (v[i] == 0)) return false;
        if (u[i] == 0) continue;
        const Rational s = u[i] / v[i];
        if (scale && *scale != s) return false;
        scale = s;
    }
    return true;
}

inline std::size_t rank_of(const std::vector<RationalVector>& rows, std::size_t cols) {
    if (rows.empty()) return 0;
    return rank(RatMatrix::from_rows(rows, cols));
}

// Möbius function from the bottom by the textbook recursion on contains-sets.
inline std::map<std::uint64_t, std::int64_t> mobius(const IntersectionLattice& lat) {
    std::vector<const Flat*> order;
    for (const auto& f : lat.flats()) order.push_back(&f);
    std::sort(order.begin(), order.end(), [](auto a, auto b) { return a->contains.size() < b->contains.size(); });
    std::map<std::uint64_t, std::int64_t> mu;
    for (auto x : order) {
        if (x->contains.empty()) {
            mu[0] = 1;
            continue;
        }
        std::int64_t s = 0;
        for (auto y : order)
            if (y->contains.mask() != x->contains.mask() && x->contains.includes(y->contains)) s += mu.at(y->contains.mask());
        mu[x->contains.mask()] = -s;
    }
    return mu;
}

inline std::vector<std::int64_t> betti(const IntersectionLattice& lat, std::size_t dim) {
    const auto mu = mobius(lat);
    std::vector<std::int64_t> b(dim + 1, 0);
    for (const auto& f : lat.flats()) b[f.codim] += (f.codim % 2 == 0 ? 1 : -1) * mu.at(f.contains.mask());
    return b;
}

// The unnormalized vector q_C = sum over orderings sigma of the faces of A^X
// with C = F_sigma(1)...F_sigma(N) of prod_p (sum_{i >= p} w_sigma(i))^{-1},
// enumerated literally over all N! orderings.
inline RationalVector permutation_sum(const Skeleton& sk, const WeightAssignment& w, std::size_t flat) {
    const auto& faces = sk.lattice().restriction_faces(flat);
    const auto& ch = sk.lattice().restriction_chambers(flat);
    std::vector<std::size_t> perm(faces.size());
    std::iota(perm.begin(), perm.end(), 0);
    RationalVector q(ch.size());
    do {
        SignVector prod = sk.face(faces[perm[0]]).signs;
        for (std::size_t i = 1; i < perm.size(); ++i) prod = face_product(prod, sk.face(faces[perm[i]]).signs);
        Rational term = 1, suffix = 0;
        for (std::size_t i = perm.size(); i-- > 0;) {
            suffix += w.weights[faces[perm[i]]];
            term /= suffix;
        }
        const auto c = sk.index_of(prod);
        q[std::find(ch.begin(), ch.end(), c) - ch.begin()] += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return q;
}

inline RationalVector normalized(RationalVector v) {
    Rational s = 0;
    for (const auto& x : v) s += x;
    for (auto& x : v) x /= s;
    return v;
}

// Whether some x satisfies the sign pattern, found by searching integer
// points of a box. Can only confirm feasibility.
inline bool sampled_feasible(const Arrangement& a, const SignVector& signs, int radius) {
    const std::size_t dim = a.dim();
    std::vector<int> x(dim, -radius);
    while (true) {
        bool ok = true;
        for (std::size_t h = 0; h < a.size() && ok; ++h) {
            Rational d = 0;
            for (std::size_t k = 0; k < dim; ++k) d += a.normal(h)[k] * x[k];
            ok = sgn(d) == signs[h];
        }
        if (ok) return true;
        std::size_t k = 0;
        while (k < dim && x[k] == radius) x[k++] = -radius;
        if (k == dim) return false;
        ++x[k];
    }
}

} // namespace oracle
