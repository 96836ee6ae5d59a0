#pragma once

/**
 * @file checks.hpp
 * @brief Exhaustive invariant checks over one arrangement. Used by the
 *        `verify` command and by the test suites.
 */

#include <arrspec/spectra.hpp>

#include <set>
#include <string>
#include <vector>

namespace arrspec::checks {

struct Result {
    std::string name;
    bool ok = true;
    std::size_t cases = 0;
    std::string detail;  // first failure
};

namespace detail {
inline Result fail(Result r, std::string why) {
    r.ok = false;
    r.detail = std::move(why);
    return r;
}
inline std::string face_name(const Skeleton& sk, std::size_t f) { return sign_string(sk.face(f).signs); }
} // namespace detail

/// |C| = sum |mu(W,X)| = sum b_p and (-1)^p mu(W,X) > 0 everywhere.
inline Result zaslavsky(const Skeleton& sk) {
    Result r{"zaslavsky", true, 0, {}};
    std::int64_t total = 0;
    for (const auto& fl : sk.lattice().flats()) {
        ++r.cases;
        const std::int64_t signed_mu = (fl.codim % 2 == 0 ? 1 : -1) * fl.mobius;
        if (signed_mu <= 0) return detail::fail(r, "(-1)^p mu(W,X) <= 0 for flat " + std::to_string(fl.id));
        total += signed_mu;
    }
    std::int64_t betti = 0;
    for (auto b : sk.lattice().betti()) betti += b;
    const auto chambers = static_cast<std::int64_t>(sk.chamber_count());
    if (total != chambers || betti != chambers)
        return detail::fail(r, "chambers " + std::to_string(chambers) + ", sum |mu| " + std::to_string(total) +
                                   ", sum b_p " + std::to_string(betti));
    return r;
}

/// |F_p(A)| = sum over X in L_p of |C(A^X)|.
inline Result face_count_decomposition(const Skeleton& sk) {
    Result r{"face_count_decomposition", true, 0, {}};
    const std::size_t dim = sk.arrangement().dim();
    for (std::size_t p = 0; p <= dim; ++p) {
        ++r.cases;
        std::size_t faces = 0, restricted = 0;
        for (const auto& f : sk.faces()) faces += f.codim == p;
        for (auto x : sk.lattice().flats_of_codim(p)) restricted += sk.lattice().restriction_chambers(x).size();
        if (faces != restricted)
            return detail::fail(r, "codim " + std::to_string(p) + ": " + std::to_string(faces) + " faces vs " +
                                       std::to_string(restricted));
    }
    return r;
}

inline Result opposite_involution(const Skeleton& sk) {
    Result r{"opposite_involution", true, 0, {}};
    for (std::size_t f = 0; f < sk.face_count(); ++f) {
        ++r.cases;
        const auto o = sk.opposite(f);
        if (sk.opposite(o) != f || sk.face(o).flat != sk.face(f).flat ||
            sk.face(o).is_chamber() != sk.face(f).is_chamber())
            return detail::fail(r, "opposite misbehaves at " + detail::face_name(sk, f));
    }
    return r;
}

inline Result semigroup_laws(const Skeleton& sk) {
    Result r{"semigroup_laws", true, 0, {}};
    auto rep = verify_semigroup_laws(sk);
    r.cases = rep.checked;
    if (!rep.ok) return detail::fail(r, rep.counterexample);
    return r;
}

/// act(F, act(G, e_C)) = act(FG, e_C) on every V(A^X), and act(F, .) is
/// nonzero on V(A^X) exactly for the faces of A^X.
inline Result local_action(const Skeleton& sk) {
    Result r{"local_action", true, 0, {}};
    const auto& lat = sk.lattice();
    for (const auto& fl : lat.flats()) {
        const auto& faces = lat.restriction_faces(fl.id);
        std::set<std::size_t> in_restriction(faces.begin(), faces.end());
        // Faces send basis chambers to basis chambers or to zero, so with
        // coefficients 2^j each output coordinate encodes exactly which
        // chambers land there; one vector stands in for the whole basis.
        auto v = zero_vector(sk, fl.id);
        Rational c = 1;
        for (auto& x : v.coeffs) {
            x = c;
            c *= 2;
        }
        std::vector<ChamberVector> gv;
        for (std::size_t g = 0; g < sk.face_count(); ++g) gv.push_back(act(sk, g, v));
        for (std::size_t f = 0; f < sk.face_count(); ++f) {
            const bool nonzero = !act(sk, f, v).is_zero();
            for (std::size_t g = 0; g < sk.face_count(); ++g) {
                r.cases += v.size();
                if (act(sk, f, gv[g]) != act(sk, sk.product(f, g), v))
                    return detail::fail(r, "F(Gv) != (FG)v for F = " + detail::face_name(sk, f) +
                                               ", G = " + detail::face_name(sk, g));
            }
            if (nonzero != (in_restriction.count(f) > 0))
                return detail::fail(r, "containment test disagrees with restriction at " + detail::face_name(sk, f));
        }
    }
    return r;
}

/// rank P_p V* = b_0 + ... + b_p and dim W^p V - dim W^{p+1} V = b_p.
inline Result filtration_ranks(const Skeleton& sk) {
    Result r{"filtration_ranks", true, 0, {}};
    const auto& betti = sk.lattice().betti();
    const std::size_t dim = sk.arrangement().dim();
    std::vector<std::size_t> ranks;
    std::int64_t partial = 0;
    for (std::size_t p = 0; p <= dim; ++p) {
        ++r.cases;
        partial += betti[p];
        ranks.push_back(filtration_rank(sk, p));
        if (static_cast<std::int64_t>(ranks.back()) != partial)
            return detail::fail(r, "p = " + std::to_string(p) + ": rank " + std::to_string(ranks.back()) +
                                       " != " + std::to_string(partial));
    }
    const auto nc = sk.chamber_count();
    for (std::size_t p = 0; p <= dim; ++p) {
        const std::size_t wp = nc - (p == 0 ? 0 : ranks[p - 1]);
        const std::size_t wp1 = nc - ranks[p];
        if (static_cast<std::int64_t>(wp - wp1) != betti[p])
            return detail::fail(r, "gr^" + std::to_string(p) + " V has the wrong dimension");
    }
    return r;
}

/// Every p-flag cochain pairs to zero with every monomial of degree < p.
inline Result dual_filtration_orthogonality(const Skeleton& sk) {
    Result r{"dual_filtration_orthogonality", true, 0, {}};
    const std::size_t dim = sk.arrangement().dim();
    for (std::size_t p = 1; p <= dim; ++p) {
        const auto mons = monomials_up_to(sk.arrangement().size(), p - 1);
        for (const auto& flag : enumerate_face_flags(sk, p)) {
            const auto b = flag_cochain(sk, flag);
            for (const auto& m : mons) {
                ++r.cases;
                Rational s = 0;
                for (std::size_t j = 0; j < sk.chamber_count(); ++j)
                    if (eval_monomial(sk, m, sk.chambers()[j])) s += b.coeffs[j];
                if (s != 0) return detail::fail(r, "flag cochain not in W^" + std::to_string(p) + "V");
            }
        }
    }
    return r;
}

inline Result epsilon_antipodal(const Skeleton& sk, const OrientationData& orient) {
    Result r{"epsilon_antipodal", true, 0, {}};
    for (std::size_t f = 0; f < sk.face_count(); ++f)
        for (auto g : sk.facets(f)) {
            ++r.cases;
            if (epsilon(sk, f, g, orient) * epsilon(sk, sk.opposite(f), sk.opposite(g), orient) != -1)
                return detail::fail(r, "eps(F,G) eps(-F,-G) != -1 at " + detail::face_name(sk, f));
        }
    return r;
}

/// All (flat flag, restricted chamber) pairs, grouped by last flat.
template <class Fn>
void for_each_flag_chamber(const Skeleton& sk, Fn&& fn) {
    const auto& lat = sk.lattice();
    for (const auto& fl : lat.flats())
        for (const auto& flags : enumerate_flat_flags(lat, fl.codim, fl.id))
            for (auto c : lat.restriction_chambers(fl.id)) fn(flags, c);
}

/// epsilon(F) b(F) is constant on each fibre of F -> (|F|, F_p).
inline Result fibre_consistency(const Skeleton& sk, const OrientationData& orient) {
    Result r{"fibre_consistency", true, 0, {}};
    std::string bad;
    for_each_flag_chamber(sk, [&](const FlatFlag& flags, std::size_t c) {
        ++r.cases;
        if (bad.empty() && !phi_fibre_consistent(sk, flags, c, orient))
            bad = "fibre over chamber " + detail::face_name(sk, c);
    });
    if (!bad.empty()) return detail::fail(r, bad);
    return r;
}

/// F b(F) = b(F F) if |F| >= |F_p|, else 0.
inline Result face_action_on_cochains(const Skeleton& sk) {
    Result r{"face_action_on_cochains", true, 0, {}};
    const std::size_t dim = sk.arrangement().dim();
    for (std::size_t p = 0; p <= dim; ++p)
        for (const auto& flag : enumerate_face_flags(sk, p)) {
            const auto b = flag_cochain(sk, flag);
            const std::size_t xp = sk.face(flag.last()).flat;
            for (std::size_t f = 0; f < sk.face_count(); ++f) {
                ++r.cases;
                const auto lhs = act(sk, f, b);
                if (sk.lies_in(f, xp)) {
                    if (lhs != flag_cochain(sk, left_multiply(sk, f, flag)))
                        return detail::fail(r, "F b(F) != b(FF) for F = " + detail::face_name(sk, f));
                } else if (!lhs.is_zero()) {
                    return detail::fail(r, "F b(F) != 0 for F = " + detail::face_name(sk, f));
                }
            }
        }
    return r;
}

/// G phi(X ⊗ C) = phi(X ⊗ GC) for |G| >= X, and 0 otherwise.
inline Result phi_homomorphism(const Skeleton& sk, const OrientationData& orient) {
    Result r{"phi_homomorphism", true, 0, {}};
    std::string bad;
    for_each_flag_chamber(sk, [&](const FlatFlag& flags, std::size_t c) {
        if (!bad.empty()) return;
        const auto v = phi(sk, flags, c, orient);
        for (std::size_t g = 0; g < sk.face_count() && bad.empty(); ++g) {
            ++r.cases;
            const auto lhs = act(sk, g, v);
            if (sk.lies_in(g, flags.last())) {
                if (lhs != phi(sk, flags, sk.product(g, c), orient))
                    bad = "G phi != phi(G .) for G = " + detail::face_name(sk, g);
            } else if (!lhs.is_zero()) {
                bad = "G phi != 0 for G = " + detail::face_name(sk, g);
            }
        }
    });
    if (!bad.empty()) return detail::fail(r, bad);
    return r;
}

/// The flag relations: for X_{i-1} < X_{i+1} two levels apart,
/// sum_Y phi((.., X_{i-1}, Y, X_{i+1}, ..) ⊗ C) = 0.
inline Result flag_relations(const Skeleton& sk, const OrientationData& orient) {
    Result r{"flag_relations", true, 0, {}};
    const auto& lat = sk.lattice();
    for (const auto& fl : lat.flats()) {
        const std::size_t p = fl.codim;
        if (p < 2) continue;
        std::set<std::pair<std::vector<std::size_t>, std::size_t>> gapped;
        for (const auto& flags : enumerate_flat_flags(lat, p, fl.id))
            for (std::size_t i = 1; i < p; ++i) {
                auto g = flags.flats;
                g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
                gapped.emplace(std::move(g), i);
            }
        for (const auto& [g, i] : gapped)
            for (auto c : lat.restriction_chambers(fl.id)) {
                ++r.cases;
                auto sum = zero_vector(sk, lat.bottom());
                for (auto y : lat.covers_up(g[i - 1])) {
                    if (!lat.leq(y, g[i])) continue;
                    FlatFlag full{g};
                    full.flats.insert(full.flats.begin() + static_cast<std::ptrdiff_t>(i), y);
                    sum += phi(sk, full, c, orient);
                }
                if (!sum.is_zero()) return detail::fail(r, "relation does not vanish at chamber " + detail::face_name(sk, c));
            }
    }
    return r;
}

/// Full diagonalization plus det(xI - K) = prod (x - lambda_X)^{|mu|} at |C|+1 points.
inline Result spectrum(const Skeleton& sk, const WeightAssignment& w, const OrientationData& orient) {
    Result r{"spectrum", true, 0, {}};
    try {
        const auto rep = full_spectrum(sk, w, orient);
        r.cases += rep.packages.size();
        const auto k = transition_matrix(sk, w);
        for (std::size_t i = 0; i <= sk.chamber_count(); ++i) {
            ++r.cases;
            const Rational x = ratio(static_cast<long>(i) - 1, 3);
            if (characteristic_value(k, x) != predicted_characteristic_value(sk, w, x))
                return detail::fail(r, "characteristic polynomial differs at x = " + to_string(x));
        }
        const auto q = q_vector(sk, w);
        if (k * q.coeffs != (lambda_of(sk, w, sk.lattice().bottom()) * q).coeffs)
            return detail::fail(r, "q is not a lambda_W eigenvector");
    } catch (const Error& e) {
        return detail::fail(r, e.what());
    }
    return r;
}

/// stationary_exact == stationary_dp_oracle on every restriction small enough for the oracle.
inline Result stationary_oracle(const Skeleton& sk, const WeightAssignment& w, std::size_t max_faces = 16) {
    Result r{"stationary_oracle", true, 0, {}};
    for (const auto& fl : sk.lattice().flats()) {
        if (sk.lattice().restriction_faces(fl.id).size() > max_faces) continue;
        ++r.cases;
        if (stationary_exact(sk, w, fl.id) != stationary_dp_oracle(sk, w, fl.id))
            return detail::fail(r, "nullspace and draw-without-replacement laws differ on flat " + std::to_string(fl.id));
    }
    return r;
}

/// Everything above.
inline std::vector<Result> run_all(const Skeleton& sk, const WeightAssignment& w, const OrientationData& orient) {
    return {zaslavsky(sk),
            face_count_decomposition(sk),
            opposite_involution(sk),
            semigroup_laws(sk),
            local_action(sk),
            filtration_ranks(sk),
            dual_filtration_orthogonality(sk),
            epsilon_antipodal(sk, orient),
            fibre_consistency(sk, orient),
            face_action_on_cochains(sk),
            phi_homomorphism(sk, orient),
            flag_relations(sk, orient),
            spectrum(sk, w, orient),
            stationary_oracle(sk, w)};
}

} // namespace arrspec::checks
