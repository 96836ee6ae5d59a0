#pragma once

/**
 * @file skeleton.hpp
 * @brief The combinatorial skeleton of an arrangement: faces, flats, the
 *        face product memo and the covering relations of the face poset.
 *
 * Everything is computed eagerly in the constructor; afterwards a Skeleton
 * is read-only and may be shared between threads.
 */

#include <arrspec/lattice.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace arrspec {

inline constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

class Skeleton {
public:
    explicit Skeleton(Arrangement a) : arr_(std::move(a)) {
        faces_ = enumerate_faces(arr_);
        lattice_ = build_lattice(arr_, faces_);
        const std::size_t nf = faces_.size();

        for (std::size_t i = 0; i < nf; ++i) index_.emplace(sign_string(faces_[i].signs), i);

        local_pos_.assign(nf, kNoIndex);
        for (const auto& fl : lattice_.flats()) {
            const auto& ch = lattice_.restriction_chambers(fl.id);
            for (std::size_t j = 0; j < ch.size(); ++j) local_pos_[ch[j]] = j;
        }
        chamber_pos_.assign(nf, kNoIndex);
        for (std::size_t j = 0; j < chambers().size(); ++j) chamber_pos_[chambers()[j]] = j;

        opposite_.resize(nf);
        for (std::size_t i = 0; i < nf; ++i) opposite_[i] = index_of(arrspec::opposite(faces_[i].signs));

        memoize_all_ = nf * nf <= kFullMemoLimit;
        if (memoize_all_) {
            product_.resize(nf * nf);
            for (std::size_t f = 0; f < nf; ++f)
                for (std::size_t g = 0; g < nf; ++g) product_[f * nf + g] = compute_product(f, g);
        } else {
            const auto& ch = chambers();
            product_.resize(nf * ch.size());
            for (std::size_t f = 0; f < nf; ++f)
                for (std::size_t j = 0; j < ch.size(); ++j) product_[f * ch.size() + j] = compute_product(f, ch[j]);
        }

        facets_.assign(nf, {});
        cofacets_.assign(nf, {});
        for (std::size_t f = 0; f < nf; ++f)
            for (std::size_t g = 0; g < nf; ++g)
                if (faces_[g].codim == faces_[f].codim + 1 && in_closure(g, f)) {
                    facets_[f].push_back(g);
                    cofacets_[g].push_back(f);
                }
    }

    const Arrangement& arrangement() const noexcept { return arr_; }
    const std::vector<Face>& faces() const noexcept { return faces_; }
    const Face& face(std::size_t i) const { return faces_[i]; }
    std::size_t face_count() const noexcept { return faces_.size(); }
    const IntersectionLattice& lattice() const noexcept { return lattice_; }

    /// Chambers of A in canonical order (face indices).
    const std::vector<std::size_t>& chambers() const { return lattice_.restriction_chambers(lattice_.bottom()); }
    std::size_t chamber_count() const { return chambers().size(); }
    /// Position of a chamber of A in chambers(), kNoIndex for other faces.
    std::size_t chamber_position(std::size_t face) const { return chamber_pos_[face]; }
    /// Position of a face among the chambers of A^{|F|}.
    std::size_t local_position(std::size_t face) const { return local_pos_[face]; }

    std::optional<std::size_t> find(const SignVector& s) const {
        auto it = index_.find(sign_string(s));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t index_of(const SignVector& s) const {
        auto i = find(s);
        if (!i) throw Error(ErrorKind::InvalidInput, "'" + sign_string(s) + "' is not a face");
        return *i;
    }

    std::size_t index_of(std::string_view sign_str) const { return index_of(parse_sign_string(sign_str)); }

    std::size_t opposite(std::size_t f) const { return opposite_[f]; }

    /// Index of the face product FG.
    std::size_t product(std::size_t f, std::size_t g) const {
        if (memoize_all_) return product_[f * faces_.size() + g];
        if (auto j = chamber_pos_[g]; j != kNoIndex) return product_[f * chamber_count() + j];
        return compute_product(f, g);
    }

    /// G lies in the closure of F: G_H is 0 or F_H for every H.
    bool in_closure(std::size_t g, std::size_t f) const {
        const auto& gs = faces_[g].signs;
        const auto& fs = faces_[f].signs;
        for (std::size_t h = 0; h < gs.size(); ++h)
            if (gs[h] != 0 && gs[h] != fs[h]) return false;
        return true;
    }

    /// Faces G with F covered by G (codim one higher, in the closure of F).
    const std::vector<std::size_t>& facets(std::size_t f) const { return facets_[f]; }
    /// Faces F of which G is a facet.
    const std::vector<std::size_t>& cofacets(std::size_t g) const { return cofacets_[g]; }

    /// |F| >= X, i.e. contains(|F|) includes contains(X).
    bool lies_in(std::size_t f, std::size_t flat) const {
        return lattice_.flat(faces_[f].flat).contains.includes(lattice_.flat(flat).contains);
    }

private:
    static constexpr std::size_t kFullMemoLimit = std::size_t{1} << 22;

    std::size_t compute_product(std::size_t f, std::size_t g) const {
        return index_of(face_product(faces_[f].signs, faces_[g].signs));
    }

    Arrangement arr_;
    std::vector<Face> faces_;
    IntersectionLattice lattice_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::size_t> local_pos_, chamber_pos_, opposite_;
    bool memoize_all_ = true;
    std::vector<std::size_t> product_;
    std::vector<std::vector<std::size_t>> facets_, cofacets_;
};

} // namespace arrspec
