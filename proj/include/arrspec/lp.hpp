#pragma once

/**
 * @file lp.hpp
 * @brief Exact-rational simplex and the strict sign feasibility test.
 */

#include <arrspec/matrix.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace arrspec {

/// A strict constraint sign(normal · x) == sign, sign in {-1, +1}.
struct StrictRow {
    RationalVector normal;
    int sign = 1;
};

namespace detail {

/// max c·x subject to A x <= b, x >= 0, with b >= 0 so the slack basis is
/// feasible from the start. Bland's rule on both entering and leaving
/// variables rules out cycling on the (very) degenerate systems used here.
/// Returns std::nullopt when the objective is unbounded.
inline std::optional<Rational> simplex_max(const std::vector<RationalVector>& a, const RationalVector& b,
                                           const RationalVector& c) {
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    const std::size_t width = n + m;
    std::vector<RationalVector> tab(m, RationalVector(width + 1));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = a[i][j];
        tab[i][n + i] = 1;
        tab[i][width] = b[i];
        basis[i] = n + i;
    }
    RationalVector reduced(width + 1);
    for (std::size_t j = 0; j < n; ++j) reduced[j] = c[j];
    // reduced[width] holds -objective.

    for (;;) {
        std::size_t enter = width;
        for (std::size_t j = 0; j < width; ++j)
            if (sgn(reduced[j]) > 0) {
                enter = j;
                break;
            }
        if (enter == width) return -reduced[width];

        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(tab[i][enter]) <= 0) continue;
            Rational ratio = tab[i][width] / tab[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = std::move(ratio);
            }
        }
        if (leave == m) return std::nullopt;

        const Rational inv = 1 / tab[leave][enter];
        for (auto& x : tab[leave]) x *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || sgn(tab[i][enter]) == 0) continue;
            const Rational f = tab[i][enter];
            for (std::size_t j = 0; j <= width; ++j)
                if (sgn(tab[leave][j]) != 0) tab[i][j] -= f * tab[leave][j];
        }
        if (sgn(reduced[enter]) != 0) {
            const Rational f = reduced[enter];
            for (std::size_t j = 0; j <= width; ++j)
                if (sgn(tab[leave][j]) != 0) reduced[j] -= f * tab[leave][j];
        }
        basis[leave] = enter;
    }
}

} // namespace detail

/**
 * Decides whether some x satisfies e·x = 0 for every equality row and
 * sign(s.normal·x) = s.sign for every strict row.
 *
 * The equalities are eliminated by parametrizing their nullspace; the strict
 * rows then become the LP  max t  s.t.  sign·(row·y) >= t,  t <= 1.
 * By homogeneity the system is feasible iff the optimum is positive.
 */
inline bool strict_sign_feasible(std::size_t dim, const std::vector<RationalVector>& equalities,
                                 const std::vector<StrictRow>& strict) {
    std::vector<RationalVector> param;
    if (equalities.empty()) {
        for (std::size_t j = 0; j < dim; ++j) {
            RationalVector e(dim);
            e[j] = 1;
            param.push_back(std::move(e));
        }
    } else {
        param = nullspace(RatMatrix::from_rows(equalities, dim));
    }
    if (strict.empty()) return true;

    const std::size_t k = param.size();
    std::vector<RationalVector> rows;
    std::vector<int> signs;
    for (const auto& s : strict) {
        RationalVector reduced(k);
        for (std::size_t j = 0; j < k; ++j) reduced[j] = dot(s.normal, param[j]);
        if (is_zero(reduced)) return false;  // the row vanishes identically on the solution space
        rows.push_back(std::move(reduced));
        signs.push_back(s.sign);
    }

    // Variables: y+ (k), y- (k), t.
    const std::size_t nvars = 2 * k + 1;
    std::vector<RationalVector> a;
    RationalVector b;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        RationalVector r(nvars);
        for (std::size_t j = 0; j < k; ++j) {
            r[j] = -signs[i] * rows[i][j];
            r[k + j] = signs[i] * rows[i][j];
        }
        r[2 * k] = 1;
        a.push_back(std::move(r));
        b.push_back(0);
    }
    RationalVector cap(nvars);
    cap[2 * k] = 1;
    a.push_back(std::move(cap));
    b.push_back(1);

    RationalVector c(nvars);
    c[2 * k] = 1;
    auto opt = detail::simplex_max(a, b, c);
    return !opt || sgn(*opt) > 0;
}

} // namespace arrspec
