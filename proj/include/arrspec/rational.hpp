#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars backed by GMP.
 *
 * mpq_class keeps every value in lowest terms with a positive denominator
 * as long as values are built through its arithmetic or through
 * parse_rational, which canonicalizes.
 */

#include <arrspec/error.hpp>

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace arrspec {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;
/// Unsigned 128-bit product/threshold type (GCC/Clang extension).
__extension__ typedef unsigned __int128 UInt128;

/// Parses "p/q" or "p" (optional leading sign); rejects q = 0 and junk.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return Error(ErrorKind::ParseError, "not a rational: '" + s + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    auto digits_ok = [](std::string_view part, bool allow_sign) {
        if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) part.remove_prefix(1);
        if (part.empty()) return false;
        for (char c : part)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
    if (num[0] == '+') num.erase(0, 1);
    Integer n(num, 10), d(den, 10);
    if (d == 0) throw bad();
    Rational r(n, d);
    r.canonicalize();
    return r;
}

/// n/d in lowest terms (the two-argument mpq constructor does not reduce).
inline Rational ratio(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline int sign(const Rational& r) { return sgn(r); }

inline Rational dot(const RationalVector& a, const RationalVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const RationalVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

} // namespace arrspec
