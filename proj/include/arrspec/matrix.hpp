#pragma once

/**
 * @file matrix.hpp
 * @brief Dense exact-rational matrices with fraction-free elimination.
 *
 * Rows are scaled to integers and reduced with Bareiss elimination, so every
 * intermediate entry is a minor of the scaled matrix and the divisions are
 * exact. Rank, determinant and nullspace all come from the same echelon form.
 */

#include <arrspec/rational.hpp>

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <string>
#include <span>
#include <utility>
#include <vector>

namespace arrspec {

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Builds a matrix whose rows are the given vectors (all of length cols).
    static RatMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
        RatMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            assert(rows[i].size() == cols);
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static RatMatrix from_columns(const std::vector<RationalVector>& columns, std::size_t rows) {
        RatMatrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            assert(columns[j].size() == rows);
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    RationalVector column(std::size_t j) const {
        RationalVector c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    RationalVector operator*(const RationalVector& v) const {
        assert(v.size() == cols_);
        RationalVector out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Rational s = 0;
            for (std::size_t j = 0; j < cols_; ++j)
                if (sgn(data_[i * cols_ + j]) != 0) s += data_[i * cols_ + j] * v[j];
            out[i] = std::move(s);
        }
        return out;
    }

    RatMatrix operator*(const RatMatrix& other) const {
        assert(cols_ == other.rows_);
        RatMatrix out(rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& a = (*this)(i, k);
                if (sgn(a) == 0) continue;
                for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
            }
        return out;
    }

    RatMatrix operator-(const RatMatrix& other) const {
        assert(rows_ == other.rows_ && cols_ == other.cols_);
        RatMatrix out(*this);
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= other.data_[k];
        return out;
    }

    RatMatrix transposed() const {
        RatMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool operator==(const RatMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

namespace detail {

/// Integer echelon form produced by Bareiss elimination.
struct Echelon {
    std::vector<std::vector<Integer>> rows;  // after elimination; first `pivots.size()` rows are nonzero
    std::vector<std::size_t> pivots;         // pivot column of each nonzero row
    Rational scale = 1;                      // product of the per-row integer scale factors
    int swap_sign = 1;
};

inline Echelon bareiss(const RatMatrix& m) {
    Echelon e;
    const std::size_t r = m.rows(), c = m.cols();
    e.rows.assign(r, std::vector<Integer>(c));
    for (std::size_t i = 0; i < r; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < c; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < c; ++j) e.rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
        e.scale *= l;
    }

    Integer prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < c && row < r; ++col) {
        std::size_t piv = row;
        while (piv < r && e.rows[piv][col] == 0) ++piv;
        if (piv == r) continue;
        if (piv != row) {
            std::swap(e.rows[piv], e.rows[row]);
            e.swap_sign = -e.swap_sign;
        }
        const Integer& p = e.rows[row][col];
        for (std::size_t i = row + 1; i < r; ++i) {
            const Integer a = e.rows[i][col];
            for (std::size_t j = col + 1; j < c; ++j) {
                Integer t = p * e.rows[i][j] - a * e.rows[row][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                e.rows[i][j] = std::move(t);
            }
            e.rows[i][col] = 0;
        }
        prev = e.rows[row][col];
        e.pivots.push_back(col);
        ++row;
    }
    return e;
}

} // namespace detail

inline std::size_t rank(const RatMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return detail::bareiss(m).pivots.size();
}

/// Exact determinant of a square matrix.
inline Rational determinant(const RatMatrix& m) {
    assert(m.rows() == m.cols());
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    auto e = detail::bareiss(m);
    if (e.pivots.size() < n) return 0;
    Rational d(e.rows[n - 1][n - 1] * e.swap_sign);
    d /= e.scale;
    return d;
}

namespace detail {

/// det of the row-scaled integer matrix modulo a prime.
inline std::uint64_t determinant_mod(const RatMatrix& m, std::uint64_t prime) {
    const std::size_t n = m.rows();
    const Integer p(std::to_string(prime));
    std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            Integer v = m(i, j).get_num() * (l / m(i, j).get_den());
            mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
            a[i][j] = v.get_ui();
        }
    }
    auto mul = [&](std::uint64_t x, std::uint64_t y) {
        return static_cast<std::uint64_t>(static_cast<UInt128>(x) * y % prime);
    };
    auto inv = [&](std::uint64_t x) {
        std::uint64_t r = 1, e = prime - 2;
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    };
    std::uint64_t det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = det == 0 ? 0 : prime - det;
        }
        det = mul(det, a[c][c]);
        const std::uint64_t iv = inv(a[c][c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            const std::uint64_t f = mul(a[i][c], iv);
            for (std::size_t j = c; j < n; ++j) a[i][j] = (a[i][j] + prime - mul(f, a[c][j])) % prime;
        }
    }
    return det;
}

} // namespace detail

/**
 * Exact nonsingularity test. A nonzero determinant modulo a prime already
 * proves the (row-scaled integer) determinant is nonzero; only when every
 * residue vanishes is the full determinant computed.
 */
inline bool is_nonsingular(const RatMatrix& m) {
    assert(m.rows() == m.cols());
    if (m.rows() == 0) return true;
    for (std::uint64_t prime : {2305843009213693951ULL, 4611686018427387847ULL})
        if (detail::determinant_mod(m, prime) != 0) return true;
    return determinant(m) != 0;
}

/// Basis of the right nullspace; one vector per non-pivot column.
inline std::vector<RationalVector> nullspace(const RatMatrix& m) {
    const std::size_t c = m.cols();
    std::vector<RationalVector> basis;
    if (c == 0) return basis;
    if (m.rows() == 0) {
        for (std::size_t j = 0; j < c; ++j) {
            RationalVector v(c);
            v[j] = 1;
            basis.push_back(std::move(v));
        }
        return basis;
    }
    auto e = detail::bareiss(m);
    std::vector<bool> is_pivot(c, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    for (std::size_t free = 0; free < c; ++free) {
        if (is_pivot[free]) continue;
        RationalVector x(c);
        x[free] = 1;
        for (std::size_t k = e.pivots.size(); k-- > 0;) {
            const std::size_t pc = e.pivots[k];
            Rational s = 0;
            for (std::size_t j = pc + 1; j < c; ++j)
                if (e.rows[k][j] != 0 && x[j] != 0) s += Rational(e.rows[k][j]) * x[j];
            x[pc] = -s / Rational(e.rows[k][pc]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Incrementally maintained independent set of vectors (greedy selection).
class RowBasis {
public:
    explicit RowBasis(std::size_t dim) : dim_(dim) {}

    /// Adds v if it is independent of the stored vectors; returns whether it was added.
    bool add(const RationalVector& v) {
        assert(v.size() == dim_);
        RationalVector r = v;
        for (std::size_t k = 0; k < reduced_.size(); ++k) {
            const Rational& f = r[pivots_[k]];
            if (f == 0) continue;
            const Rational factor = f;
            for (std::size_t j = 0; j < dim_; ++j)
                if (reduced_[k][j] != 0) r[j] -= factor * reduced_[k][j];
        }
        std::size_t p = 0;
        while (p < dim_ && r[p] == 0) ++p;
        if (p == dim_) return false;
        const Rational inv = 1 / r[p];
        for (auto& x : r) x *= inv;
        // Keep earlier rows reduced against the new pivot so pivots stay unique.
        for (auto& row : reduced_) {
            if (row[p] == 0) continue;
            const Rational factor = row[p];
            for (std::size_t j = 0; j < dim_; ++j)
                if (r[j] != 0) row[j] -= factor * r[j];
        }
        reduced_.push_back(std::move(r));
        pivots_.push_back(p);
        return true;
    }

    std::size_t size() const noexcept { return reduced_.size(); }
    std::size_t dim() const noexcept { return dim_; }

private:
    std::size_t dim_;
    std::vector<RationalVector> reduced_;
    std::vector<std::size_t> pivots_;
};

/// True iff u = c·v for some scalar c (including u = v = 0).
inline bool proportional(const RationalVector& u, const RationalVector& v) {
    if (u.size() != v.size()) return false;
    std::size_t k = 0;
    while (k < v.size() && v[k] == 0) ++k;
    if (k == v.size()) return is_zero(u);
    const Rational c = u[k] / v[k];
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != c * v[i]) return false;
    return true;
}

} // namespace arrspec
