#pragma once

/**
 * @file spectra.hpp
 * @brief Transition operator of the face random walk, its eigenvalues
 *        lambda_X, stationary vectors and eigenvector bases built from flag
 *        cochains.
 *
 * Every check in this header is an exact rational equality.
 */

#include <arrspec/random.hpp>
#include <arrspec/vg.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace arrspec {

/// One weight per face, in canonical face order.
struct WeightAssignment {
    RationalVector weights;

    static WeightAssignment uniform(const Skeleton& sk) {
        const auto n = sk.face_count();
        return {RationalVector(n, Rational(1, static_cast<unsigned long>(n)))};
    }

    /// Numerators and denominators drawn uniformly from [1, 1000].
    static WeightAssignment random(const Skeleton& sk, Rng& rng) {
        WeightAssignment w;
        for (std::size_t i = 0; i < sk.face_count(); ++i) {
            Rational r(uniform_int(rng, 1, 1000), uniform_int(rng, 1, 1000));
            r.canonicalize();
            w.weights.push_back(r);
        }
        return w;
    }

    static WeightAssignment random(const Skeleton& sk, std::uint64_t seed) {
        Rng rng(seed);
        return random(sk, rng);
    }

    Rational total() const {
        Rational s = 0;
        for (const auto& x : weights) s += x;
        return s;
    }

    bool all_positive() const {
        return std::all_of(weights.begin(), weights.end(), [](const Rational& x) { return sgn(x) > 0; });
    }

    bool all_nonnegative() const {
        return std::all_of(weights.begin(), weights.end(), [](const Rational& x) { return sgn(x) >= 0; });
    }

    /// Probability mode: rescaled to sum 1.
    WeightAssignment normalized() const {
        const Rational t = total();
        if (sgn(t) <= 0) throw Error(ErrorKind::DegenerateWeights, "weights must have positive total");
        WeightAssignment w = *this;
        for (auto& x : w.weights) x /= t;
        return w;
    }

    WeightAssignment scaled(const Rational& c) const {
        WeightAssignment w = *this;
        for (auto& x : w.weights) x *= c;
        return w;
    }
};

namespace detail {

inline void check_weights(const Skeleton& sk, const WeightAssignment& w, bool require_positive) {
    if (w.weights.size() != sk.face_count())
        throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(sk.face_count()) + " weights, got " +
                                                      std::to_string(w.weights.size()));
    if (require_positive ? !w.all_positive() : !w.all_nonnegative())
        throw Error(ErrorKind::DegenerateWeights,
                    require_positive ? "weights must be strictly positive" : "weights must be nonnegative");
}

} // namespace detail

/// lambda_X = sum of w_F over the faces F with |F| >= X.
inline Rational lambda_of(const Skeleton& sk, const WeightAssignment& w, std::size_t flat) {
    detail::check_weights(sk, w, false);
    Rational s = 0;
    for (auto f : sk.lattice().restriction_faces(flat)) s += w.weights[f];
    return s;
}

/// K_{A^X}[C', C] = sum of w_F over faces F of A^X with FC = C'.
inline RatMatrix local_transition_matrix(const Skeleton& sk, const WeightAssignment& w, std::size_t flat) {
    detail::check_weights(sk, w, false);
    const auto& ch = sk.lattice().restriction_chambers(flat);
    RatMatrix k(ch.size(), ch.size());
    for (std::size_t j = 0; j < ch.size(); ++j)
        for (auto f : sk.lattice().restriction_faces(flat))
            if (sgn(w.weights[f]) != 0) k(sk.local_position(sk.product(f, ch[j])), j) += w.weights[f];
    return k;
}

/// K(C) = sum_F w_F FC; column C is the (unnormalized) law of FC.
inline RatMatrix transition_matrix(const Skeleton& sk, const WeightAssignment& w) {
    return local_transition_matrix(sk, w, sk.lattice().bottom());
}

/**
 * The lambda_X-eigenvector of K_{A^X}, normalized to coordinate sum 1: the
 * stationary distribution of the walk restricted to X. Throws
 * DegenerateWeights when the eigenspace is not a line, unless `permissive`
 * (then the first basis vector is used).
 */
inline ChamberVector stationary_exact(const Skeleton& sk, const WeightAssignment& w, std::size_t flat,
                                      bool permissive = false) {
    detail::check_weights(sk, w, !permissive);
    RatMatrix k = local_transition_matrix(sk, w, flat);
    const Rational lam = lambda_of(sk, w, flat);
    for (std::size_t i = 0; i < k.rows(); ++i) k(i, i) -= lam;
    auto ns = nullspace(k);
    if (ns.empty() || (!permissive && ns.size() != 1))
        throw Error(ErrorKind::DegenerateWeights,
                    "lambda eigenspace of the restricted walk has dimension " + std::to_string(ns.size()));
    Rational s = 0;
    for (const auto& x : ns.front()) s += x;
    if (s == 0) throw Error(ErrorKind::DegenerateWeights, "stationary vector has zero coordinate sum");
    ChamberVector v{flat, std::move(ns.front())};
    v *= 1 / s;
    return v;
}

inline ChamberVector stationary_exact(const Skeleton& sk, const WeightAssignment& w) {
    return stationary_exact(sk, w, sk.lattice().bottom());
}

inline constexpr std::size_t kMaxOracleFaces = 20;

/**
 * Law of the chamber F_{s(1)} F_{s(2)} ... when the faces of A^X are drawn
 * without replacement with probability proportional to their weights.
 * Forward dynamic program over (faces used, running product); a running
 * product that is already a chamber of A^X is final.
 */
inline ChamberVector stationary_dp_oracle(const Skeleton& sk, const WeightAssignment& w, std::size_t flat) {
    detail::check_weights(sk, w, true);
    const auto& faces = sk.lattice().restriction_faces(flat);
    const std::size_t n = faces.size();
    if (n > kMaxOracleFaces)
        throw Error(ErrorKind::TooManyFaces, std::to_string(n) + " faces exceed the oracle limit of " +
                                                 std::to_string(kMaxOracleFaces));
    const std::size_t origin = sk.lattice().restriction_chambers(sk.lattice().top()).front();
    const std::uint64_t stride = sk.face_count();

    auto result = zero_vector(sk, flat);
    std::unordered_map<std::uint64_t, Rational> layer;
    layer.emplace(origin, Rational(1));  // key = used_mask * stride + product
    while (!layer.empty()) {
        std::unordered_map<std::uint64_t, Rational> next;
        for (const auto& [key, prob] : layer) {
            const std::uint64_t used = key / stride;
            const std::size_t prod = key % stride;
            if (sk.face(prod).flat == flat) {
                result.coeffs[sk.local_position(prod)] += prob;
                continue;
            }
            Rational remaining = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (!((used >> i) & 1U)) remaining += w.weights[faces[i]];
            for (std::size_t i = 0; i < n; ++i) {
                if ((used >> i) & 1U) continue;
                const std::uint64_t k2 = (used | (std::uint64_t{1} << i)) * stride + sk.product(prod, faces[i]);
                next[k2] += prob * w.weights[faces[i]] / remaining;
            }
        }
        layer = std::move(next);
    }
    return result;
}

inline ChamberVector stationary_dp_oracle(const Skeleton& sk, const WeightAssignment& w) {
    return stationary_dp_oracle(sk, w, sk.lattice().bottom());
}

/**
 * The unnormalized lambda_X-eigenvector
 *   q_C = lambda_X * sum_{s : C = F_s(1)...F_s(N)} prod_{p>=1} (sum_{i>=p} w_{F_s(i)})^{-1}
 * over the faces of A^X. Since the p = 1 factor is 1/lambda_X for every
 * permutation, this is the permutation sum with that common factor dropped.
 * Comparing with the draw-without-replacement law pi gives
 *   q = lambda_X * pi / prod_F w_F,
 * which is how it is computed.
 */
inline ChamberVector q_vector(const Skeleton& sk, const WeightAssignment& w, std::size_t flat) {
    auto pi = stationary_exact(sk, w, flat);
    Rational prod = 1;
    for (auto f : sk.lattice().restriction_faces(flat)) prod *= w.weights[f];
    pi *= lambda_of(sk, w, flat) / prod;
    return pi;
}

inline ChamberVector q_vector(const Skeleton& sk, const WeightAssignment& w) {
    return q_vector(sk, w, sk.lattice().bottom());
}

struct EigenPackage {
    std::size_t flat = 0;
    Rational lambda;
    std::size_t multiplicity = 0;          // (-1)^p mu(W, X)
    std::vector<ChamberVector> basis;      // vectors on the chambers of A
    std::vector<FlatFlag> spanning_flags;  // flags whose psi_X entered the basis
};

struct SpectrumReport {
    std::vector<EigenPackage> packages;  // one per flat, in lattice order
    RatMatrix change_of_basis;           // columns: all basis vectors, package by package
};

struct SpectrumOptions {
    /// Evaluate and check psi_X on every flat flag instead of stopping once
    /// the expected multiplicity is reached.
    bool exhaustive = true;
};

/// psi_X(flags) = sum_{C in chambers of A^X} q^X_C phi(flags ⊗ C), with the
/// probability-normalized stationary vector of A^X standing in for q^X.
inline ChamberVector psi(const Skeleton& sk, const FlatFlag& flags, const ChamberVector& qx,
                         const OrientationData& orient) {
    const auto& ch = sk.lattice().restriction_chambers(flags.last());
    auto v = zero_vector(sk, sk.lattice().bottom());
    for (std::size_t j = 0; j < ch.size(); ++j) {
        if (qx.coeffs[j] == 0) continue;
        v += qx.coeffs[j] * phi(sk, flags, ch[j], orient);
    }
    return v;
}

namespace detail {

inline void check_eigen(const RatMatrix& k, const Rational& lambda, const ChamberVector& v, const std::string& ctx) {
    const auto kv = k * v.coeffs;
    for (std::size_t i = 0; i < kv.size(); ++i)
        if (kv[i] != lambda * v.coeffs[i])
            throw Error(ErrorKind::NotAnEigenvector, ctx + ": K v != lambda v at coordinate " + std::to_string(i));
}

inline std::string flag_context(const Skeleton& sk, const FlatFlag& flags) {
    std::string s = "flag (";
    for (std::size_t i = 0; i < flags.flats.size(); ++i) {
        s += i ? ", {" : "{";
        auto v = sk.lattice().flat(flags.flats[i]).contains.to_vector();
        for (std::size_t j = 0; j < v.size(); ++j) s += (j ? "," : "") + std::to_string(v[j]);
        s += "}";
    }
    return s + ")";
}

inline EigenPackage eigen_package(const Skeleton& sk, const WeightAssignment& w, std::size_t flat,
                                  const OrientationData& orient, const RatMatrix& k, const SpectrumOptions& opt) {
    const auto& fl = sk.lattice().flat(flat);
    EigenPackage pkg;
    pkg.flat = flat;
    pkg.lambda = lambda_of(sk, w, flat);
    const std::int64_t expected = (fl.codim % 2 == 0 ? 1 : -1) * fl.mobius;
    const auto qx = stationary_exact(sk, w, flat);

    RowBasis rb(sk.chamber_count());
    for (const auto& flags : enumerate_flat_flags(sk.lattice(), fl.codim, flat)) {
        if (!opt.exhaustive && static_cast<std::int64_t>(pkg.basis.size()) == expected) break;
        auto v = psi(sk, flags, qx, orient);
        check_eigen(k, pkg.lambda, v, flag_context(sk, flags));
        if (rb.add(v.coeffs)) {
            pkg.basis.push_back(std::move(v));
            pkg.spanning_flags.push_back(flags);
        }
    }
    pkg.multiplicity = pkg.basis.size();
    if (static_cast<std::int64_t>(pkg.multiplicity) != expected)
        throw Error(ErrorKind::MultiplicityMismatch, "flat {" + [&] {
            std::string s;
            for (auto h : fl.contains.to_vector()) s += (s.empty() ? "" : ",") + std::to_string(h);
            return s;
        }() + "}: rank " + std::to_string(pkg.multiplicity) + " != |mu| = " + std::to_string(expected));
    return pkg;
}

} // namespace detail

/// Eigenvalue, multiplicity and a basis of the lambda_X eigenspace spanned by psi_X.
inline EigenPackage eigenvectors_for_flat(const Skeleton& sk, const WeightAssignment& w, std::size_t flat,
                                          const OrientationData& orient, const SpectrumOptions& opt = {}) {
    detail::check_weights(sk, w, true);
    return detail::eigen_package(sk, w, flat, orient, transition_matrix(sk, w), opt);
}

/// Runs every flat and checks that the union of the bases diagonalizes K.
inline SpectrumReport full_spectrum(const Skeleton& sk, const WeightAssignment& w, const OrientationData& orient,
                                    const SpectrumOptions& opt = {}) {
    detail::check_weights(sk, w, true);
    const RatMatrix k = transition_matrix(sk, w);
    SpectrumReport rep;
    std::vector<RationalVector> columns;
    for (const auto& fl : sk.lattice().flats()) {
        rep.packages.push_back(detail::eigen_package(sk, w, fl.id, orient, k, opt));
        for (const auto& v : rep.packages.back().basis) columns.push_back(v.coeffs);
    }
    if (columns.size() != sk.chamber_count())
        throw Error(ErrorKind::MultiplicityMismatch, "multiplicities sum to " + std::to_string(columns.size()) +
                                                         ", expected " + std::to_string(sk.chamber_count()));
    rep.change_of_basis = RatMatrix::from_columns(columns, sk.chamber_count());
    if (!is_nonsingular(rep.change_of_basis))
        throw Error(ErrorKind::MultiplicityMismatch, "eigenvectors of different flats are linearly dependent");
    return rep;
}

/// det(x I - M).
inline Rational characteristic_value(const RatMatrix& m, const Rational& x) {
    RatMatrix a(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = (i == j ? x : Rational(0)) - m(i, j);
    return determinant(a);
}

/// prod_X (x - lambda_X)^{(-1)^p mu(W, X)}.
inline Rational predicted_characteristic_value(const Skeleton& sk, const WeightAssignment& w, const Rational& x) {
    Rational r = 1;
    for (const auto& fl : sk.lattice().flats()) {
        const Rational lam = lambda_of(sk, w, fl.id);
        const std::int64_t mult = (fl.codim % 2 == 0 ? 1 : -1) * fl.mobius;
        for (std::int64_t i = 0; i < mult; ++i) r *= x - lam;
    }
    return r;
}

/// Distinct eigenvalues with their summed multiplicities, largest first.
inline std::vector<std::pair<Rational, std::size_t>> eigenvalue_table(const Skeleton& sk, const WeightAssignment& w) {
    std::map<Rational, std::size_t, std::greater<>> m;
    for (const auto& fl : sk.lattice().flats())
        m[lambda_of(sk, w, fl.id)] += static_cast<std::size_t>((fl.codim % 2 == 0 ? 1 : -1) * fl.mobius);
    return {m.begin(), m.end()};
}

} // namespace arrspec
