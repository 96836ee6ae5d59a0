#pragma once

/**
 * @file walk.hpp
 * @brief Monte Carlo simulation of the face random walk C -> FC.
 *
 * Faces are sampled by comparing one raw 64-bit draw u against the exact
 * thresholds ceil(2^64 * (w_1 + ... + w_i)), so the sampling error per face
 * is below 2^-64 and no floating point is involved.
 */

#include <arrspec/spectra.hpp>

#include <boost/math/special_functions/gamma.hpp>

#include <cstdint>
#include <vector>

namespace arrspec {

class FaceSampler {
public:
    /// Takes probability-mode weights (nonnegative, summing to 1).
    FaceSampler(const Skeleton& sk, const WeightAssignment& w) {
        detail::check_weights(sk, w, false);
        if (w.total() != 1) throw Error(ErrorKind::DegenerateWeights, "sampler needs weights normalized to sum 1");
        const Integer two64 = Integer(1) << 64;
        Rational cum = 0;
        for (const auto& x : w.weights) {
            cum += x;
            Rational scaled = cum * two64;
            Integer t;
            mpz_cdiv_q(t.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
            thresholds_.push_back(to_u128(t));
        }
    }

    std::size_t sample(Rng& rng) const {
        const UInt128 u = rng();
        std::size_t lo = 0, hi = thresholds_.size() - 1;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (u < thresholds_[mid])
                hi = mid;
            else
                lo = mid + 1;
        }
        return lo;
    }

private:
    static UInt128 to_u128(const Integer& v) {
        const Integer lo_mask = (Integer(1) << 64) - 1;
        const Integer hi = v >> 64;
        const Integer lo = v & lo_mask;
        auto as_u64 = [](const Integer& x) {
            std::uint64_t r = 0;
            mpz_export(&r, nullptr, -1, sizeof r, 0, 0, x.get_mpz_t());
            return r;
        };
        return (static_cast<UInt128>(as_u64(hi)) << 64) | as_u64(lo);
    }

    std::vector<UInt128> thresholds_;
};

struct WalkState {
    std::size_t current = 0;  // face index of a chamber
    std::uint64_t seed = 0;
    std::uint64_t step_count = 0;
    Rng rng;

    WalkState(std::size_t start, std::uint64_t s) : current(start), seed(s), rng(s) {}
};

inline void step(WalkState& state, const Skeleton& sk, const FaceSampler& sampler) {
    state.current = sk.product(sampler.sample(state.rng), state.current);
    ++state.step_count;
}

struct EmpiricalDistribution {
    std::vector<std::uint64_t> counts;  // per chamber, canonical order
    std::uint64_t total = 0;
};

/// Occupancy of the chain started at the first chamber, counted after each
/// of the steps burn_in + 1 .. steps.
inline EmpiricalDistribution run(const Skeleton& sk, const WeightAssignment& w, std::uint64_t steps,
                                 std::uint64_t seed, std::uint64_t burn_in = 100) {
    if (steps <= burn_in) throw Error(ErrorKind::InvalidInput, "steps must exceed burn_in");
    const FaceSampler sampler(sk, w.normalized());
    WalkState state(sk.chambers().front(), seed);
    EmpiricalDistribution emp{std::vector<std::uint64_t>(sk.chamber_count()), 0};
    while (state.step_count < steps) {
        step(state, sk, sampler);
        if (state.step_count > burn_in) {
            ++emp.counts[sk.chamber_position(state.current)];
            ++emp.total;
        }
    }
    return emp;
}

inline Rational tv_distance_exact(const EmpiricalDistribution& emp, const ChamberVector& exact) {
    if (emp.counts.size() != exact.size())
        throw Error(ErrorKind::DimensionMismatch, "empirical and exact distributions index different chamber sets");
    if (emp.total == 0) throw Error(ErrorKind::InvalidInput, "empty empirical distribution");
    Rational s = 0;
    const Rational total(Integer(std::to_string(emp.total)));
    for (std::size_t i = 0; i < emp.counts.size(); ++i) {
        const Rational d = Rational(Integer(std::to_string(emp.counts[i]))) / total - exact.coeffs[i];
        s += abs(d);
    }
    return s / 2;
}

/// (1/2) sum_C |emp_C / total - exact_C|.
inline double tv_distance(const EmpiricalDistribution& emp, const ChamberVector& exact) {
    return tv_distance_exact(emp, exact).get_d();
}

/// Counts of FC over `samples` independent single steps from one chamber.
inline std::vector<std::uint64_t> one_step_counts(const Skeleton& sk, const WeightAssignment& w, std::size_t chamber,
                                                  std::uint64_t samples, std::uint64_t seed) {
    const FaceSampler sampler(sk, w.normalized());
    Rng rng(seed);
    std::vector<std::uint64_t> counts(sk.chamber_count());
    for (std::uint64_t i = 0; i < samples; ++i) ++counts[sk.chamber_position(sk.product(sampler.sample(rng), chamber))];
    return counts;
}

struct ChiSquare {
    double statistic = 0;
    std::size_t dof = 0;
    double p_value = 1;
};

/// Pearson goodness of fit of counts against exact probabilities; cells
/// with zero probability must be empty and are left out.
inline ChiSquare chi_square(const std::vector<std::uint64_t>& counts, const RationalVector& probs) {
    ChiSquare r;
    double n = 0;
    for (auto c : counts) n += static_cast<double>(c);
    std::size_t cells = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const double p = probs[i].get_d();
        if (p == 0) {
            if (counts[i] != 0) return {std::numeric_limits<double>::infinity(), 0, 0};
            continue;
        }
        const double e = n * p;
        const double d = static_cast<double>(counts[i]) - e;
        r.statistic += d * d / e;
        ++cells;
    }
    r.dof = cells > 0 ? cells - 1 : 0;
    r.p_value = r.dof == 0 ? 1.0 : boost::math::gamma_q(static_cast<double>(r.dof) / 2, r.statistic / 2);
    return r;
}

/// 1 - lambda_2 / lambda_W with lambda_2 the second largest distinct eigenvalue.
inline Rational spectral_gap(const Skeleton& sk, const WeightAssignment& w) {
    auto table = eigenvalue_table(sk, w);
    if (table.size() < 2) return 1;
    return 1 - table[1].first / table[0].first;
}

} // namespace arrspec
