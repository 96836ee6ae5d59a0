#pragma once

/**
 * @file lattice.hpp
 * @brief Intersection lattice L(A) ordered by reverse inclusion, with its
 *        Moebius function and Betti numbers.
 *
 * A flat is identified by its contains-set: the hyperplanes containing it.
 * X <= Y iff contains(X) is a subset of contains(Y); the bottom element is
 * the ambient space (empty set) and the top is the origin.
 */

#include <arrspec/faces.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace arrspec {

struct Flat {
    std::size_t id = 0;
    IndexSet contains;
    std::size_t codim = 0;
    std::int64_t mobius = 0;  // mu(W, X)
};

class IntersectionLattice {
public:
    const std::vector<Flat>& flats() const noexcept { return flats_; }
    const Flat& flat(std::size_t id) const { return flats_[id]; }
    std::size_t size() const noexcept { return flats_.size(); }

    std::size_t bottom() const noexcept { return 0; }
    std::size_t top() const noexcept { return flats_.size() - 1; }

    /// X <= Y in reverse inclusion.
    bool leq(std::size_t x, std::size_t y) const { return flats_[y].contains.includes(flats_[x].contains); }

    const std::vector<std::size_t>& covers_up(std::size_t x) const { return up_[x]; }
    const std::vector<std::size_t>& covers_down(std::size_t y) const { return down_[y]; }

    /// b_p = (-1)^p sum_{X in L_p} mu(W, X), p = 0..dim.
    const std::vector<std::int64_t>& betti() const noexcept { return betti_; }

    std::vector<std::size_t> flats_of_codim(std::size_t p) const {
        std::vector<std::size_t> out;
        for (const auto& f : flats_)
            if (f.codim == p) out.push_back(f.id);
        return out;
    }

    std::size_t find(IndexSet contains) const {
        auto it = index_.find(contains.mask());
        if (it == index_.end()) throw Error(ErrorKind::FlatNotFound, "no flat with that contains-set");
        return it->second;
    }

    /// Faces F with |F| >= X, i.e. the faces of the restriction A^X (indices into the face list).
    const std::vector<std::size_t>& restriction_faces(std::size_t x) const { return restriction_[x]; }
    /// Faces with |F| = X, the chambers of A^X, in canonical order.
    const std::vector<std::size_t>& restriction_chambers(std::size_t x) const { return chambers_[x]; }

    friend IntersectionLattice build_lattice(const Arrangement& a, std::vector<Face>& faces);

private:
    std::vector<Flat> flats_;
    std::vector<std::vector<std::size_t>> up_, down_;
    std::vector<std::int64_t> betti_;
    std::map<std::uint64_t, std::size_t> index_;
    std::vector<std::vector<std::size_t>> restriction_, chambers_;
};

/// Builds L(A) from the complete face list and assigns each face its flat.
inline IntersectionLattice build_lattice(const Arrangement& a, std::vector<Face>& faces) {
    IntersectionLattice lat;
    std::map<std::uint64_t, std::size_t> codims;
    for (const auto& f : faces) codims.emplace(f.zeros().mask(), f.codim);

    for (const auto& [mask, codim] : codims) {
        Flat fl;
        fl.contains = IndexSet(mask);
        fl.codim = codim;
        lat.flats_.push_back(fl);
    }
    std::sort(lat.flats_.begin(), lat.flats_.end(), [](const Flat& x, const Flat& y) {
        if (x.codim != y.codim) return x.codim < y.codim;
        return x.contains.to_vector() < y.contains.to_vector();
    });

    const std::size_t n = lat.flats_.size();
    for (std::size_t i = 0; i < n; ++i) {
        lat.flats_[i].id = i;
        lat.index_[lat.flats_[i].contains.mask()] = i;
    }
    if (n == 0 || !lat.flats_.front().contains.empty() || lat.flats_.back().codim != a.dim())
        throw Error(ErrorKind::InvalidInput, "face list does not describe an essential arrangement");

    // Zero sets of faces are closed; check it so a bad face list cannot slip through.
    for (const auto& fl : lat.flats_)
        for (std::size_t h = 0; h < a.size(); ++h) {
            if (fl.contains.contains(h)) continue;
            IndexSet bigger = fl.contains;
            bigger.insert(h);
            if (a.rank_of(bigger) == fl.codim)
                throw Error(ErrorKind::InvalidInput, "contains-set of a flat is not closed");
        }

    lat.up_.assign(n, {});
    lat.down_.assign(n, {});
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (lat.flats_[y].codim == lat.flats_[x].codim + 1 && lat.leq(x, y)) {
                lat.up_[x].push_back(y);
                lat.down_[y].push_back(x);
            }

    lat.flats_[0].mobius = 1;
    for (std::size_t x = 1; x < n; ++x) {
        std::int64_t s = 0;
        for (std::size_t y = 0; y < x; ++y)
            if (lat.flats_[y].codim < lat.flats_[x].codim && lat.leq(y, x)) s += lat.flats_[y].mobius;
        lat.flats_[x].mobius = -s;
    }

    lat.betti_.assign(a.dim() + 1, 0);
    for (const auto& fl : lat.flats_) lat.betti_[fl.codim] += (fl.codim % 2 == 0 ? 1 : -1) * fl.mobius;

    lat.restriction_.assign(n, {});
    lat.chambers_.assign(n, {});
    for (std::size_t i = 0; i < faces.size(); ++i) {
        const IndexSet z = faces[i].zeros();
        faces[i].flat = lat.index_.at(z.mask());
        for (std::size_t x = 0; x < n; ++x)
            if (z.includes(lat.flats_[x].contains)) lat.restriction_[x].push_back(i);
        lat.chambers_[faces[i].flat].push_back(i);
    }
    return lat;
}

} // namespace arrspec
