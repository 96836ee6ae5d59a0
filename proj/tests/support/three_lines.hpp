#pragma once

// Test data for the arrangement x, y, x - y in the plane, in the labelling
// the published eigenvector table uses.

#include <arrspec/arrspec.hpp>

#include <array>
#include <string>

namespace fixture {

using namespace arrspec;

// Chambers counterclockwise starting at +++.
inline constexpr std::array<const char*, 6> kCounterclockwise = {"+++", "++-", "-+-", "---", "--+", "+-+"};

// w_0 .. w_6: the origin and the six rays.
inline constexpr std::array<const char*, 7> kWeightLabels = {"000", "++0", "0+-", "-0-", "--0", "0-+", "+0+"};

inline Skeleton skeleton() { return Skeleton(gen::three_lines()); }

// Standard orientation except at the origin, where the basis is ((0,1),(1,0)).
// With it the flag (++- < 0+- < 000) has epsilon = -1.
inline OrientationData orientation(const Skeleton& sk) {
    auto o = OrientationData::standard(sk);
    o.set(sk, sk.lattice().top(), {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
    return o;
}

inline Rational label(const Skeleton& sk, const WeightAssignment& w, int i) {
    return w.weights[sk.index_of(std::string(kWeightLabels[i]))];
}

// Canonical chamber position of the i-th chamber in counterclockwise order.
inline std::size_t ccw_position(const Skeleton& sk, int i) {
    return sk.chamber_position(sk.index_of(std::string(kCounterclockwise[i])));
}

// A vector written in counterclockwise order, moved to canonical order.
inline RationalVector from_ccw(const Skeleton& sk, const std::array<Rational, 6>& ccw) {
    RationalVector v(6);
    for (int i = 0; i < 6; ++i) v[ccw_position(sk, i)] = ccw[i];
    return v;
}

inline std::size_t flat_of(const Skeleton& sk, std::initializer_list<std::size_t> hyperplanes) {
    return sk.lattice().find(IndexSet::of(std::vector<std::size_t>(hyperplanes)));
}

inline FaceFlag face_flag(const Skeleton& sk, std::initializer_list<const char*> signs) {
    FaceFlag f;
    for (auto s : signs) f.faces.push_back(sk.index_of(std::string(s)));
    return f;
}

// Chamber vector (canonical order) from sign-string coefficients.
inline RationalVector chambers(const Skeleton& sk, std::initializer_list<std::pair<const char*, int>> terms) {
    RationalVector v(sk.chamber_count());
    for (auto [s, c] : terms) v[sk.chamber_position(sk.index_of(std::string(s)))] += c;
    return v;
}

} // namespace fixture
