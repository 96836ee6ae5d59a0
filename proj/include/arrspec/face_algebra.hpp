#pragma once

/**
 * @file face_algebra.hpp
 * @brief Chamber vectors and the (local) action of faces on them.
 */

#include <arrspec/skeleton.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace arrspec {

/// Coefficients on the chambers of A^X in canonical order. domain = X;
/// the bottom flat gives ordinary vectors on the chambers of A.
struct ChamberVector {
    std::size_t domain = 0;
    RationalVector coeffs;

    std::size_t size() const noexcept { return coeffs.size(); }
    bool is_zero() const { return arrspec::is_zero(coeffs); }

    ChamberVector& operator+=(const ChamberVector& o) {
        for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
        return *this;
    }
    ChamberVector& operator*=(const Rational& c) {
        for (auto& x : coeffs) x *= c;
        return *this;
    }
    friend ChamberVector operator*(const Rational& c, ChamberVector v) { return v *= c; }
    friend ChamberVector operator+(ChamberVector a, const ChamberVector& b) { return a += b; }
    friend ChamberVector operator-(ChamberVector v) { return v *= Rational(-1); }

    bool operator==(const ChamberVector&) const = default;
};

inline ChamberVector zero_vector(const Skeleton& sk, std::size_t flat) {
    return {flat, RationalVector(sk.lattice().restriction_chambers(flat).size())};
}

/// Unit vector at a chamber of A^{|C|}.
inline ChamberVector unit_vector(const Skeleton& sk, std::size_t chamber) {
    auto v = zero_vector(sk, sk.face(chamber).flat);
    v.coeffs[sk.local_position(chamber)] = 1;
    return v;
}

/**
 * F·v on V(A^X): a chamber C of A^X goes to FC when |F| >= X and to 0
 * otherwise. With X the bottom flat this is the ordinary action on V(A).
 */
inline ChamberVector act(const Skeleton& sk, std::size_t f, const ChamberVector& v) {
    auto out = zero_vector(sk, v.domain);
    if (!sk.lies_in(f, v.domain)) return out;
    const auto& chambers = sk.lattice().restriction_chambers(v.domain);
    for (std::size_t j = 0; j < chambers.size(); ++j) {
        if (v.coeffs[j] == 0) continue;
        out.coeffs[sk.local_position(sk.product(f, chambers[j]))] += v.coeffs[j];
    }
    return out;
}

struct LawReport {
    bool ok = true;
    std::size_t checked = 0;
    std::string counterexample;
};

/// Exhaustive check of closure, idempotence, FGF = FG and associativity.
inline LawReport verify_semigroup_laws(const Skeleton& sk) {
    LawReport r;
    const std::size_t n = sk.face_count();
    auto name = [&](std::size_t i) { return sign_string(sk.face(i).signs); };
    auto fail = [&](const std::string& what) {
        r.ok = false;
        r.counterexample = what;
        return r;
    };
    for (std::size_t f = 0; f < n; ++f) {
        if (sk.product(f, f) != f) return fail("FF != F for F = " + name(f));
        for (std::size_t g = 0; g < n; ++g) {
            if (!sk.find(face_product(sk.face(f).signs, sk.face(g).signs)))
                return fail("product " + name(f) + "·" + name(g) + " is not a face");
            const std::size_t fg = sk.product(f, g);
            if (sk.product(fg, f) != fg) return fail("FGF != FG for F = " + name(f) + ", G = " + name(g));
            if (sk.face(g).is_chamber() && !sk.face(fg).is_chamber())
                return fail("F·C is not a chamber for F = " + name(f) + ", C = " + name(g));
            for (std::size_t e = 0; e < n; ++e) {
                ++r.checked;
                if (sk.product(fg, e) != sk.product(f, sk.product(g, e)))
                    return fail("(FG)E != F(GE) for " + name(f) + ", " + name(g) + ", " + name(e));
            }
        }
    }
    return r;
}

inline std::string format_vector(const RationalVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << to_string(v[i]);
    os << ')';
    return os.str();
}

} // namespace arrspec
