// Acceptance checks: one PASS/FAIL line per criterion.
//
//   acceptance        run every criterion
//   acceptance N      run criterion N only

#include <arrspec/arrspec.hpp>
#include <support/oracles.hpp>
#include <support/suite.hpp>
#include <support/three_lines.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

using namespace arrspec;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<Outcome()> run;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

std::int64_t signed_mu(const Flat& f, const std::map<std::uint64_t, std::int64_t>& mu) {
    return (f.codim % 2 ? -1 : 1) * mu.at(f.contains.mask());
}

bool is_random(const suite::Case& c) { return c.name.rfind("random-", 0) == 0; }

// --- 1 ---------------------------------------------------------------------

Outcome golden_eigenbasis() {
    auto sk = fixture::skeleton();
    const auto orient = fixture::orientation(sk);
    const auto& lat = sk.lattice();
    const auto h1 = fixture::flat_of(sk, {0}), h2 = fixture::flat_of(sk, {1}), h3 = fixture::flat_of(sk, {2});
    std::size_t compared = 0;
    for (std::uint64_t seed = 101; seed <= 105; ++seed) {
        const auto w = WeightAssignment::random(sk, seed);
        auto L = [&](int i) { return fixture::label(sk, w, i); };
        const auto rep = full_spectrum(sk, w, orient);
        std::map<std::size_t, const EigenPackage*> by_flat;
        for (const auto& p : rep.packages) by_flat[p.flat] = &p;

        struct Row {
            std::size_t flat;
            std::array<Rational, 6> ccw;
            Rational lambda;
        };
        const Row rows[] = {{h1, {0, L(2), -L(2), 0, -L(5), L(5)}, L(0) + L(2) + L(5)},
                            {h2, {L(6), 0, L(3), -L(3), 0, -L(6)}, L(0) + L(3) + L(6)},
                            {h3, {-L(1), L(1), 0, L(4), -L(4), 0}, L(0) + L(1) + L(4)}};
        for (const auto& r : rows) {
            const auto& pkg = *by_flat.at(r.flat);
            if (pkg.multiplicity != 1) return fail("codim-1 flat with multiplicity " + std::to_string(pkg.multiplicity));
            if (!oracle::proportional(pkg.basis[0].coeffs, fixture::from_ccw(sk, r.ccw)))
                return fail("codim-1 eigenvector differs from the table at seed " + std::to_string(seed));
            if (pkg.lambda != r.lambda) return fail("codim-1 eigenvalue differs at seed " + std::to_string(seed));
            ++compared;
        }

        // The stationary row: q, here compared with the sampling-without-replacement law.
        const auto& top = *by_flat.at(lat.bottom());
        if (top.multiplicity != 1 || !oracle::proportional(top.basis[0].coeffs, stationary_dp_oracle(sk, w).coeffs))
            return fail("stationary eigenvector differs at seed " + std::to_string(seed));
        if (top.lambda != w.total()) return fail("lambda_W is not the total weight");
        ++compared;

        // Origin rows, flag by flag, then the package as a whole.
        const auto& origin = *by_flat.at(lat.top());
        const std::pair<std::size_t, std::array<Rational, 6>> origin_rows[] = {{h1, {0, -1, 1, 0, -1, 1}},
                                                                              {h2, {1, 0, -1, 1, 0, -1}}};
        const auto q0 = stationary_exact(sk, w, lat.top());
        std::vector<RationalVector> span;
        for (const auto& [mid, ccw] : origin_rows) {
            const auto v = psi(sk, FlatFlag{{lat.bottom(), mid, lat.top()}}, q0, orient);
            if (!oracle::proportional(v.coeffs, fixture::from_ccw(sk, ccw)))
                return fail("origin eigenvector differs from the table at seed " + std::to_string(seed));
            span.push_back(fixture::from_ccw(sk, ccw));
            ++compared;
        }
        if (origin.multiplicity != 2 || origin.lambda != L(0)) return fail("origin package has the wrong shape");
        for (const auto& v : origin.basis) span.push_back(v.coeffs);
        if (oracle::rank_of(span, 6) != 2) return fail("origin eigenspace differs from the table");
    }
    return {true, std::to_string(compared) + " table rows matched over 5 weight vectors"};
}

// --- 2 ---------------------------------------------------------------------

Outcome golden_stationary() {
    Skeleton sk(gen::point_on_line());
    Rng rng(2024);
    for (int t = 0; t < 5; ++t) {
        WeightAssignment w = WeightAssignment::random(sk, rng);
        const Rational wp = w.weights[sk.index_of("+")], w0 = w.weights[sk.index_of("0")],
                       wm = w.weights[sk.index_of("-")];
        const Rational s = (wp + w0 + wm) / (w0 * wp * wm * (wp + wm));
        if (q_vector(sk, w).coeffs != RationalVector{s * wp, s * wm})
            return fail("q differs for weights " + format_vector(w.weights));
    }
    return {true, "5 weight triples"};
}

// --- 3 ---------------------------------------------------------------------

Outcome golden_cochains() {
    auto sk = fixture::skeleton();
    const auto orient = fixture::orientation(sk);
    const auto& lat = sk.lattice();
    using fixture::chambers;
    const auto flag = fixture::face_flag(sk, {"++-", "0+-", "000"});
    if (flag_cochain(sk, flag).coeffs != chambers(sk, {{"++-", 1}, {"-+-", -1}, {"+-+", -1}, {"--+", 1}}))
        return fail("b(F) differs");
    const FlatFlag wh1{{lat.bottom(), fixture::flat_of(sk, {0})}};
    if (phi(sk, wh1, sk.index_of("0-+"), orient).coeffs != chambers(sk, {{"+-+", 1}, {"--+", -1}}))
        return fail("phi at 0-+ differs");
    if (phi(sk, wh1, sk.index_of("0+-"), orient).coeffs != chambers(sk, {{"++-", 1}, {"-+-", -1}}))
        return fail("phi at 0+- differs");
    if (const int e = epsilon(sk, flag, orient); e != -1) return fail("epsilon(F) = " + std::to_string(e));
    return {true, "b(F), two phi values, epsilon(F) = -1"};
}

// --- 4 ---------------------------------------------------------------------

Outcome multiplicities() {
    std::size_t randoms = 0, cases = 0;
    for (const auto& c : suite::arrangements()) {
        Skeleton sk(c.arrangement);
        const auto w = WeightAssignment::random(sk, 500 + cases++);
        randoms += is_random(c);
        const auto mu = oracle::mobius(sk.lattice());
        const auto rep = full_spectrum(sk, w, OrientationData::standard(sk));
        const auto k = transition_matrix(sk, w);
        std::size_t total = 0;
        std::map<Rational, std::int64_t> by_lambda;
        for (const auto& pkg : rep.packages) {
            const auto& fl = sk.lattice().flat(pkg.flat);
            if (static_cast<std::int64_t>(pkg.multiplicity) != signed_mu(fl, mu))
                return fail(c.name + ": eigenspace dimension differs from |mu| at a codim-" + std::to_string(fl.codim) + " flat");
            for (const auto& v : pkg.basis)
                if (k * v.coeffs != (pkg.lambda * v).coeffs) return fail(c.name + ": K v != lambda v");
            by_lambda[pkg.lambda] += signed_mu(fl, mu);
            total += pkg.multiplicity;
        }
        if (total != sk.chamber_count()) return fail(c.name + ": multiplicities do not sum to |C|");
        if (!is_nonsingular(rep.change_of_basis)) return fail(c.name + ": eigenvectors are dependent");
        for (const auto& [lam, m] : by_lambda) {
            auto a = k;
            for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) -= lam;
            if (static_cast<std::int64_t>(a.cols() - rank(a)) != m) return fail(c.name + ": kernel dimension mismatch");
        }
        for (std::size_t i = 0; i <= sk.chamber_count(); ++i) {
            const Rational x = ratio(2 * static_cast<long>(i) + 1, 5);
            auto a = k;
            for (std::size_t r = 0; r < a.rows(); ++r)
                for (std::size_t s = 0; s < a.cols(); ++s) a(r, s) = (r == s ? x : Rational(0)) - k(r, s);
            Rational rhs = 1;
            for (const auto& fl : sk.lattice().flats())
                for (std::int64_t e = 0; e < signed_mu(fl, mu); ++e) rhs *= x - lambda_of(sk, w, fl.id);
            if (determinant(a) != rhs) return fail(c.name + ": characteristic polynomial differs at x = " + to_string(x));
        }
    }
    if (randoms < 20) return fail("only " + std::to_string(randoms) + " random arrangements");
    return {true, std::to_string(cases) + " arrangements (" + std::to_string(randoms) + " random)"};
}

// --- 5 ---------------------------------------------------------------------

Outcome oracle_agreement() {
    std::size_t dp = 0, perm = 0;
    std::uint64_t seed = 900;
    for (const auto& c : suite::arrangements()) {
        Skeleton sk(c.arrangement);
        const auto w = WeightAssignment::random(sk, seed++);
        for (const auto& fl : sk.lattice().flats()) {
            const auto n = sk.lattice().restriction_faces(fl.id).size();
            if (n > 16) continue;
            const auto exact = stationary_exact(sk, w, fl.id);
            if (exact != stationary_dp_oracle(sk, w, fl.id)) return fail(c.name + ": exact and DP oracle differ");
            ++dp;
            if (n > 8) continue;
            if (exact.coeffs != oracle::normalized(oracle::permutation_sum(sk, w, fl.id)))
                return fail(c.name + ": exact and permutation sum differ");
            ++perm;
        }
    }
    return {true, std::to_string(dp) + " DP comparisons, " + std::to_string(perm) + " permutation-sum comparisons"};
}

// --- 6 ---------------------------------------------------------------------

Outcome filtration() {
    std::size_t checked = 0;
    for (const auto& c : suite::arrangements()) {
        Skeleton sk(c.arrangement);
        const auto b = oracle::betti(sk.lattice(), c.arrangement.dim());
        std::int64_t partial = 0;
        for (std::size_t p = 0; p <= c.arrangement.dim(); ++p) {
            partial += b[p];
            if (static_cast<std::int64_t>(filtration_rank(sk, p)) != partial)
                return fail(c.name + ": rank at p = " + std::to_string(p));
            ++checked;
        }
    }
    return {true, std::to_string(checked) + " (arrangement, p) pairs"};
}

// --- 7 ---------------------------------------------------------------------

Outcome cochain_properties() {
    std::size_t arrangements = 0, cases = 0;
    auto check = [&](const std::string& name, const Skeleton& sk, const OrientationData& orient) -> Outcome {
        for (const auto& r : {checks::dual_filtration_orthogonality(sk), checks::fibre_consistency(sk, orient),
                              checks::face_action_on_cochains(sk), checks::phi_homomorphism(sk, orient)}) {
            if (!r.ok) return fail(name + ": " + r.name + ": " + r.detail);
            cases += r.cases;
        }
        ++arrangements;
        return {};
    };
    auto tl = fixture::skeleton();
    if (auto o = check("three-lines (fixture orientation)", tl, fixture::orientation(tl)); !o.ok) return o;
    for (const auto& c : suite::small_arrangements(5)) {
        Skeleton sk(c.arrangement);
        if (auto o = check(c.name, sk, OrientationData::standard(sk)); !o.ok) return o;
    }
    return {true, std::to_string(arrangements) + " arrangements, " + std::to_string(cases) + " cases"};
}

// --- 8 ---------------------------------------------------------------------

Outcome semigroup() {
    std::size_t triples = 0;
    for (const auto& c : suite::small_arrangements(5)) {
        Skeleton sk(c.arrangement);
        std::map<SignVector, std::size_t> index;
        for (std::size_t i = 0; i < sk.face_count(); ++i) index[sk.face(i).signs] = i;
        const auto& faces = sk.faces();
        for (const auto& f : faces) {
            if (face_product(f.signs, f.signs) != f.signs) return fail(c.name + ": FF != F");
            for (const auto& g : faces) {
                const auto fg = face_product(f.signs, g.signs);
                if (!index.count(fg)) return fail(c.name + ": product leaves the face set");
                if (face_product(fg, f.signs) != fg) return fail(c.name + ": FGF != FG");
                for (const auto& e : faces) {
                    ++triples;
                    if (face_product(fg, e.signs) != face_product(f.signs, face_product(g.signs, e.signs)))
                        return fail(c.name + ": not associative");
                }
            }
        }
        if (auto r = verify_semigroup_laws(sk); !r.ok) return fail(c.name + ": " + r.counterexample);
    }
    return {true, std::to_string(triples) + " triples"};
}

// --- 9 ---------------------------------------------------------------------

Outcome simulation() {
    auto sk = fixture::skeleton();
    const auto w = WeightAssignment::uniform(sk);
    const auto exact = stationary_exact(sk, w);
    const auto emp = run(sk, w, 1000000, 20260415);
    const double tv = tv_distance(emp, exact);
    if (tv >= 0.01) return fail("TV distance " + std::to_string(tv));

    const auto k = transition_matrix(sk, w);
    double worst = 1;
    for (auto c : sk.chambers()) {
        RationalVector law(sk.chamber_count());
        for (std::size_t i = 0; i < law.size(); ++i) law[i] = k(i, sk.chamber_position(c)) / w.total();
        auto r = chi_square(one_step_counts(sk, w, c, 100000, 7000 + c), law);
        if (r.p_value <= 0.001) r = chi_square(one_step_counts(sk, w, c, 100000, 8000 + c), law);  // one retry
        if (r.p_value <= 0.001) return fail("one-step chi-square p = " + std::to_string(r.p_value));
        worst = std::min(worst, r.p_value);
    }
    std::ostringstream os;
    os << "TV " << tv << ", spectral gap " << spectral_gap(sk, w).get_d() << ", min one-step p " << worst;
    return {true, os.str()};
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "golden eigenbasis, three lines", 1, golden_eigenbasis},
        {2, "golden stationary vector, point on a line", 1, golden_stationary},
        {3, "golden flag cochains, phi and epsilon", 1, golden_cochains},
        {4, "eigenvalue multiplicities and characteristic polynomial", 30, multiplicities},
        {5, "stationary vector oracles agree", 20, oracle_agreement},
        {6, "filtration ranks equal partial Betti sums", 10, filtration},
        {7, "orthogonality, fibre consistency and module actions", 30, cochain_properties},
        {8, "semigroup laws", 5, semigroup},
        {9, "simulation sanity", 10, simulation},
    };
    return all;
}

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);
    bool all_ok = true;
    for (const auto& c : criteria()) {
        if (only && c.id != only) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && secs >= c.budget_seconds) o = fail("took longer than " + std::to_string(c.budget_seconds) + " s");
        all_ok = all_ok && o.ok;
        std::printf("[%s] criterion %d: %s (%.2f s of %.0f s) - %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                    secs, c.budget_seconds, o.detail.c_str());
    }
    return all_ok ? 0 : 1;
}
