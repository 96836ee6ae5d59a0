#pragma once

/**
 * @file vg.hpp
 * @brief Heaviside monomials, flags, coorientations, flag cochains and the
 *        map phi from (flat flag, restricted chamber) pairs to chamber vectors.
 */

#include <arrspec/face_algebra.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace arrspec {

/// x_I = prod_{H in I} x_H with x_H(C) = [C on the positive side of H].
struct HeavisideMonomial {
    IndexSet hyperplanes;
    std::size_t degree() const { return hyperplanes.size(); }
};

inline int eval_monomial(const Skeleton& sk, const HeavisideMonomial& m, std::size_t chamber) {
    const auto& s = sk.face(chamber).signs;
    for (auto h : m.hyperplanes.to_vector())
        if (s[h] != 1) return 0;
    return 1;
}

/// All square-free monomials of degree <= p, by degree then lexicographically.
inline std::vector<HeavisideMonomial> monomials_up_to(std::size_t n, std::size_t p) {
    std::vector<HeavisideMonomial> out;
    std::vector<std::size_t> pick;
    for (std::size_t d = 0; d <= std::min(p, n); ++d) {
        auto rec = [&](auto&& self, std::size_t start) -> void {
            if (pick.size() == d) {
                out.push_back({IndexSet::of(pick)});
                return;
            }
            for (std::size_t h = start; h < n; ++h) {
                pick.push_back(h);
                self(self, h + 1);
                pick.pop_back();
            }
        };
        rec(rec, 0);
    }
    return out;
}

/// Rows: monomials of degree <= p; columns: chambers of A.
inline RatMatrix evaluation_matrix(const Skeleton& sk, std::size_t p) {
    const auto mons = monomials_up_to(sk.arrangement().size(), p);
    const auto& ch = sk.chambers();
    RatMatrix m(mons.size(), ch.size());
    for (std::size_t i = 0; i < mons.size(); ++i)
        for (std::size_t j = 0; j < ch.size(); ++j) m(i, j) = eval_monomial(sk, mons[i], ch[j]);
    return m;
}

/// dim P_p V*; equals b_0 + ... + b_p.
inline std::size_t filtration_rank(const Skeleton& sk, std::size_t p) { return rank(evaluation_matrix(sk, p)); }

/// F_0 < F_1 < ... < F_p, F_i of codimension i, each a facet of the previous.
struct FaceFlag {
    std::vector<std::size_t> faces;
    std::size_t length() const { return faces.size() - 1; }
    std::size_t last() const { return faces.back(); }
    auto operator<=>(const FaceFlag&) const = default;
};

/// W = X_0 < X_1 < ... < X_p, consecutive covers in L(A).
struct FlatFlag {
    std::vector<std::size_t> flats;
    std::size_t length() const { return flats.size() - 1; }
    std::size_t last() const { return flats.back(); }
    auto operator<=>(const FlatFlag&) const = default;
};

inline std::vector<FaceFlag> enumerate_face_flags(const Skeleton& sk, std::size_t p) {
    std::vector<FaceFlag> out;
    FaceFlag cur;
    auto rec = [&](auto&& self) -> void {
        if (cur.length() == p) {
            out.push_back(cur);
            return;
        }
        for (auto g : sk.facets(cur.last())) {
            cur.faces.push_back(g);
            self(self);
            cur.faces.pop_back();
        }
    };
    for (auto c : sk.chambers()) {
        cur.faces = {c};
        rec(rec);
    }
    return out;
}

/// p-flags of L(A) starting at W; restricted to those ending at `ending_at`
/// when given, which are exactly the p-flags of L(A_X).
inline std::vector<FlatFlag> enumerate_flat_flags(const IntersectionLattice& lat, std::size_t p,
                                                  std::optional<std::size_t> ending_at = std::nullopt) {
    std::vector<FlatFlag> out;
    FlatFlag cur{{lat.bottom()}};
    auto rec = [&](auto&& self) -> void {
        if (cur.length() == p) {
            if (!ending_at || cur.last() == *ending_at) out.push_back(cur);
            return;
        }
        for (auto y : lat.covers_up(cur.last())) {
            if (ending_at && !lat.leq(y, *ending_at)) continue;
            cur.flats.push_back(y);
            self(self);
            cur.flats.pop_back();
        }
    };
    rec(rec);
    return out;
}

inline FlatFlag support(const Skeleton& sk, const FaceFlag& f) {
    FlatFlag x;
    for (auto i : f.faces) x.flats.push_back(sk.face(i).flat);
    return x;
}

/// F·(F_0 < ... < F_p) = (F F_0, ..., F F_p); a flag only when |F| >= |F_p|.
inline FaceFlag left_multiply(const Skeleton& sk, std::size_t f, const FaceFlag& flag) {
    FaceFlag out;
    for (auto g : flag.faces) out.faces.push_back(sk.product(f, g));
    return out;
}

/**
 * A coorientation of every flat: an ordered basis of span{f_H : H in A_X}.
 * Being attached to flats, it is automatically the same on parallel faces.
 */
class OrientationData {
public:
    /// The first codim(X) linearly independent normals of A_X, in hyperplane order.
    static OrientationData standard(const Skeleton& sk) {
        OrientationData o;
        const auto& a = sk.arrangement();
        for (const auto& fl : sk.lattice().flats()) {
            std::vector<RationalVector> basis;
            RowBasis rb(a.dim());
            for (auto h : fl.contains.to_vector()) {
                if (basis.size() == fl.codim) break;
                if (rb.add(a.normal(h))) basis.push_back(a.normal(h));
            }
            o.bases_.push_back(std::move(basis));
        }
        return o;
    }

    const std::vector<RationalVector>& basis(std::size_t flat) const { return bases_[flat]; }

    /// Replaces the basis of one flat after checking it spans the right space.
    void set(const Skeleton& sk, std::size_t flat, std::vector<RationalVector> basis) {
        const auto& fl = sk.lattice().flat(flat);
        const auto& a = sk.arrangement();
        if (basis.size() != fl.codim)
            throw Error(ErrorKind::DegenerateOrientation, "orientation needs exactly codim(X) vectors");
        for (const auto& v : basis)
            if (v.size() != a.dim()) throw Error(ErrorKind::DimensionMismatch, "orientation vector has wrong length");
        if (!basis.empty() && rank(RatMatrix::from_rows(basis, a.dim())) != fl.codim)
            throw Error(ErrorKind::DegenerateOrientation, "orientation vectors are dependent");
        auto all = basis;
        for (auto h : fl.contains.to_vector()) all.push_back(a.normal(h));
        if (!all.empty() && rank(RatMatrix::from_rows(all, a.dim())) != fl.codim)
            throw Error(ErrorKind::DegenerateOrientation, "orientation vectors leave the normal space of the flat");
        bases_[flat] = std::move(basis);
    }

private:
    std::vector<std::vector<RationalVector>> bases_;
};

/**
 * epsilon(F, G) for a cover F < G: append the outward displacement
 * w = sum_{H in A_Y \ A_X} F_H f_H to the orientation of X = |F| and compare
 * the resulting frame with the orientation of Y = |G|.
 */
inline int epsilon(const Skeleton& sk, std::size_t f, std::size_t g, const OrientationData& orient) {
    const auto& a = sk.arrangement();
    const auto& F = sk.face(f);
    const auto& G = sk.face(g);
    if (G.codim != F.codim + 1 || !sk.in_closure(g, f))
        throw Error(ErrorKind::InvalidInput, "epsilon needs a covering pair of faces");
    const auto& lat = sk.lattice();
    const IndexSet ax = lat.flat(F.flat).contains;
    const IndexSet ay = lat.flat(G.flat).contains;

    RationalVector w(a.dim());
    for (auto h : ay.to_vector()) {
        if (ax.contains(h)) continue;
        for (std::size_t k = 0; k < a.dim(); ++k) w[k] += F.signs[h] * a.normal(h)[k];
    }
    std::vector<RationalVector> frame = orient.basis(F.flat);
    frame.push_back(std::move(w));
    const auto& basis = orient.basis(G.flat);
    const std::size_t k = basis.size();

    // Coordinates in `basis` are determined by any k ambient coordinates on
    // which the basis is independent.
    std::vector<std::size_t> coords;
    RowBasis rb(k);
    for (std::size_t r = 0; r < a.dim() && coords.size() < k; ++r) {
        RationalVector row(k);
        for (std::size_t j = 0; j < k; ++j) row[j] = basis[j][r];
        if (rb.add(row)) coords.push_back(r);
    }
    if (coords.size() != k) throw Error(ErrorKind::DegenerateOrientation, "orientation basis is degenerate");
    RatMatrix bm(k, k), fm(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            bm(i, j) = basis[j][coords[i]];
            fm(i, j) = frame[j][coords[i]];
        }
    const int s = sign(determinant(fm)) * sign(determinant(bm));
    if (s == 0)
        throw Error(ErrorKind::DegenerateOrientation,
                    "zero determinant for cover " + sign_string(F.signs) + " < " + sign_string(G.signs));
    return s;
}

inline int epsilon(const Skeleton& sk, const FaceFlag& flag, const OrientationData& orient) {
    int s = 1;
    for (std::size_t i = 0; i + 1 < flag.faces.size(); ++i) s *= epsilon(sk, flag.faces[i], flag.faces[i + 1], orient);
    return s;
}

/// b(F) = F_p (F_{p-1} - opp F_{p-1}) ... (F_0 - opp F_0), expanded left to right.
inline ChamberVector flag_cochain(const Skeleton& sk, const FaceFlag& flag) {
    struct Term {
        std::size_t face;
        int sign;
    };
    std::vector<Term> terms{{flag.last(), 1}};
    for (std::size_t i = flag.faces.size() - 1; i-- > 0;) {
        const std::size_t fi = flag.faces[i];
        const std::size_t fbar = sk.opposite(fi);
        std::vector<Term> next;
        next.reserve(terms.size() * 2);
        for (const auto& t : terms) {
            next.push_back({sk.product(t.face, fi), t.sign});
            next.push_back({sk.product(t.face, fbar), -t.sign});
        }
        terms = std::move(next);
    }
    auto v = zero_vector(sk, sk.lattice().bottom());
    for (const auto& t : terms) v.coeffs[sk.chamber_position(t.face)] += t.sign;
    return v;
}

/// All face flags F with |F| = flags and F_p = chamber, in lexicographic order.
inline std::vector<FaceFlag> fibre(const Skeleton& sk, const FlatFlag& flags, std::size_t chamber) {
    if (sk.face(chamber).flat != flags.last())
        throw Error(ErrorKind::EmptyFibre, "chamber does not lie on the last flat of the flag");
    std::vector<FaceFlag> out;
    std::vector<std::size_t> rev{chamber};
    auto rec = [&](auto&& self, std::size_t level) -> void {
        if (level == 0) {
            out.push_back({{rev.rbegin(), rev.rend()}});
            return;
        }
        for (auto f : sk.cofacets(rev.back())) {
            if (sk.face(f).flat != flags.flats[level - 1]) continue;
            rev.push_back(f);
            self(self, level - 1);
            rev.pop_back();
        }
    };
    rec(rec, flags.length());
    std::sort(out.begin(), out.end());
    return out;
}

/// phi(X ⊗ C) = epsilon(F) b(F) for the lexicographically least F in the fibre.
inline ChamberVector phi(const Skeleton& sk, const FlatFlag& flags, std::size_t chamber, const OrientationData& orient) {
    auto reps = fibre(sk, flags, chamber);
    if (reps.empty()) throw Error(ErrorKind::EmptyFibre, "no face flag realizes the flat flag at this chamber");
    const auto& f = reps.front();
    return Rational(epsilon(sk, f, orient)) * flag_cochain(sk, f);
}

/// Whether epsilon(F) b(F) agrees over the whole fibre (2^p representatives).
inline bool phi_fibre_consistent(const Skeleton& sk, const FlatFlag& flags, std::size_t chamber,
                                 const OrientationData& orient) {
    auto reps = fibre(sk, flags, chamber);
    if (reps.size() != (std::size_t{1} << flags.length())) return false;
    const auto first = Rational(epsilon(sk, reps.front(), orient)) * flag_cochain(sk, reps.front());
    for (std::size_t i = 1; i < reps.size(); ++i)
        if (Rational(epsilon(sk, reps[i], orient)) * flag_cochain(sk, reps[i]) != first) return false;
    return true;
}

} // namespace arrspec
