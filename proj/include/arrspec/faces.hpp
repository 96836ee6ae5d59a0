#pragma once

/**
 * @file faces.hpp
 * @brief Faces as sign vectors, the face product, and face enumeration.
 */

#include <arrspec/arrangement.hpp>
#include <arrspec/lp.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace arrspec {

using Sign = std::int8_t;
using SignVector = std::vector<Sign>;

inline constexpr std::size_t kNoFlat = std::numeric_limits<std::size_t>::max();

struct Face {
    SignVector signs;
    std::size_t codim = 0;
    std::size_t flat = kNoFlat;  // index into IntersectionLattice::flats()

    bool is_chamber() const {
        for (auto s : signs)
            if (s == 0) return false;
        return true;
    }

    /// Hyperplanes containing the face; this is the contains-set of |F|.
    IndexSet zeros() const {
        IndexSet z;
        for (std::size_t i = 0; i < signs.size(); ++i)
            if (signs[i] == 0) z.insert(i);
        return z;
    }
};

/// Compact form over "+0-", e.g. "+0-".
inline std::string sign_string(const SignVector& s) {
    std::string out;
    out.reserve(s.size());
    for (auto x : s) out.push_back(x > 0 ? '+' : (x < 0 ? '-' : '0'));
    return out;
}

inline SignVector parse_sign_string(std::string_view text) {
    SignVector s;
    s.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '+': s.push_back(1); break;
        case '0': s.push_back(0); break;
        case '-': s.push_back(-1); break;
        default: throw Error(ErrorKind::ParseError, "bad sign character in '" + std::string(text) + "'");
        }
    }
    return s;
}

/// (FG)_H = F_H if F_H != 0, else G_H.
inline SignVector face_product(const SignVector& f, const SignVector& g) {
    SignVector out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] != 0 ? f[i] : g[i];
    return out;
}

inline SignVector opposite(const SignVector& f) {
    SignVector out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = static_cast<Sign>(-f[i]);
    return out;
}

/// Canonical coordinate order + < 0 < -.
inline int sign_rank(Sign s) { return s > 0 ? 0 : (s == 0 ? 1 : 2); }

inline bool canonical_less(const SignVector& a, const SignVector& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return sign_rank(a[i]) < sign_rank(b[i]);
    return a.size() < b.size();
}

/// Whether some point realizes the (possibly partial) sign vector on the
/// first signs.size() hyperplanes.
inline bool is_feasible(const Arrangement& a, const SignVector& signs) {
    std::vector<RationalVector> eq;
    std::vector<StrictRow> strict;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] == 0)
            eq.push_back(a.normal(i));
        else
            strict.push_back({a.normal(i), signs[i]});
    }
    return strict_sign_feasible(a.dim(), eq, strict);
}

/**
 * All faces of the arrangement in canonical order, found by depth-first
 * extension over the hyperplanes with prefix feasibility pruning. Every face
 * has its codimension filled in; flats are assigned by build_lattice.
 */
inline std::vector<Face> enumerate_faces(const Arrangement& a) {
    std::vector<Face> faces;
    SignVector prefix;
    prefix.reserve(a.size());
    const Sign order[3] = {1, 0, -1};

    auto dfs = [&](auto&& self) -> void {
        if (prefix.size() == a.size()) {
            Face f;
            f.signs = prefix;
            f.codim = a.rank_of(f.zeros());
            faces.push_back(std::move(f));
            return;
        }
        for (Sign s : order) {
            prefix.push_back(s);
            if (is_feasible(a, prefix)) self(self);
            prefix.pop_back();
        }
    };
    dfs(dfs);
    return faces;
}

} // namespace arrspec
