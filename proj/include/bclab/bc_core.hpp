#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bclab/errors.hpp"
#include "bclab/iterlog.hpp"

// Generic Borel-Cantelli machinery for nonnegative summand streams: the
// Chebyshev deviation bound, variance-ratio condition checkers, the
// threshold-crossing subsequence used to upgrade in-probability convergence
// to almost-sure convergence, and normalized-sum trajectories.
namespace bclab::bc {

// Partial-sum data of a stream of nonnegative random variables:
// E S_n, optionally var(S_n), and a uniform bound on E X_i.
struct SummandSeries {
    std::vector<double> expected_partial_sums;               // E S_n, nondecreasing
    std::optional<std::vector<double>> variance_partial_sums;  // var(S_n)
    double sup_mean_bound = 0.0;                             // sup_i E X_i

    void validate() const {
        double prev = 0.0;
        for (double v : expected_partial_sums) {
            if (!std::isfinite(v) || v < 0.0)
                throw std::invalid_argument("SummandSeries: E S_n must be finite and >= 0");
            if (v < prev)
                throw std::invalid_argument("SummandSeries: E S_n must be nondecreasing");
            prev = v;
        }
        if (variance_partial_sums) {
            if (variance_partial_sums->size() != expected_partial_sums.size())
                throw std::invalid_argument("SummandSeries: variance length mismatch");
            for (double v : *variance_partial_sums)
                if (!std::isfinite(v) || v < 0.0)
                    throw std::invalid_argument("SummandSeries: var(S_n) must be finite and >= 0");
        }
    }
};

// Outcome of a variance-ratio condition check at threshold c:
//   passes  <=>  ratio_sup <= c.
// Indices where the iterated logarithms are not defined are skipped and
// counted, not failed; the condition is asymptotic.
struct VarianceConditionReport {
    double gamma = 0.0;
    double ratio_sup = 0.0;
    bool passes = false;
    std::int64_t checked_count = 0;
    std::int64_t skipped_count = 0;
};

// P(|S_n - E S_n| > sigma E S_n) <= var(S_n) / (sigma E S_n)^2.
inline double chebyshev_deviation_bound(double es, double var, double sigma) {
    if (!(es > 0.0)) throw std::domain_error("chebyshev_deviation_bound: need E S_n > 0");
    if (!(sigma > 0.0)) throw std::domain_error("chebyshev_deviation_bound: need sigma > 0");
    if (!(var >= 0.0)) throw std::domain_error("chebyshev_deviation_bound: need var >= 0");
    const double d = sigma * es;
    return var / (d * d);
}

// sup over n >= n_min of  var(S_n) (log E S_n) (log log E S_n)^gamma / (E S_n)^2,
// the ratio whose boundedness drives S_n / E S_n -> 1 a.s.
// Indices with E S_n <= e are skipped (log log undefined or <= 0).
// n_min is 1-based.
inline VarianceConditionReport check_variance_condition(const SummandSeries& series,
                                                        double gamma, double c,
                                                        std::int64_t n_min) {
    if (!(gamma > 1.0)) throw std::domain_error("check_variance_condition: need gamma > 1");
    if (!series.variance_partial_sums)
        throw std::invalid_argument("check_variance_condition: series lacks variance entries");
    series.validate();
    if (n_min < 1) n_min = 1;

    VarianceConditionReport rep;
    rep.gamma = gamma;
    const auto& es = series.expected_partial_sums;
    const auto& vs = *series.variance_partial_sums;
    for (std::size_t i = static_cast<std::size_t>(n_min - 1); i < es.size(); ++i) {
        const double e = es[i];
        if (!(e > kE)) {
            ++rep.skipped_count;
            continue;
        }
        const double ratio = vs[i] * std::log(e) * std::pow(log2x(e), gamma) / (e * e);
        if (ratio > rep.ratio_sup) rep.ratio_sup = ratio;
        ++rep.checked_count;
    }
    if (rep.checked_count == 0)
        throw std::domain_error("check_variance_condition: no index with E S_n > e");
    rep.passes = rep.ratio_sup <= c;
    return rep;
}

// Pairwise-covariance variant: cross_sums[n-1] = sum_{1<=i<j<=n} (E(X_i X_j) - mu^2),
// already centered at mu (mu is recorded by the caller; it is not re-applied
// here).  Checks sup_n cross_sums[n] (log n) (log log n)^gamma / n^2 <= c.
// Indices n <= e^e are skipped.
inline VarianceConditionReport check_pairwise_cov_condition(
    const std::vector<double>& cross_sums, double /*mu*/, double gamma, double c) {
    if (!(gamma > 1.0)) throw std::domain_error("check_pairwise_cov_condition: need gamma > 1");
    VarianceConditionReport rep;
    rep.gamma = gamma;
    for (std::size_t i = 0; i < cross_sums.size(); ++i) {
        const double n = static_cast<double>(i + 1);
        if (!(n > kEE)) {
            ++rep.skipped_count;
            continue;
        }
        const double ratio = cross_sums[i] * std::log(n) * std::pow(log2x(n), gamma) / (n * n);
        if (ratio > rep.ratio_sup) rep.ratio_sup = ratio;
        ++rep.checked_count;
    }
    if (rep.checked_count == 0)
        throw std::domain_error("check_pairwise_cov_condition: no index with n > e^e");
    rep.passes = rep.ratio_sup <= c;
    return rep;
}

// n_k = inf { n >= 1 : es_eval(n) >= exp(k / (log k)^theta) }, for k = 2..k_max.
//
// es_eval must be nondecreasing in n and unbounded.  The search gallops and
// then bisects, so the total number of evaluations stays small; eval_cap
// bounds it to keep the operation total when es_eval never reaches the
// threshold.  Note the threshold itself is not monotone in k near k = 2
// (k / (log k)^theta dips until k > e^theta), so each k is searched
// independently and the output need not be nondecreasing at the very start.
inline std::vector<std::int64_t> threshold_crossing_subsequence(
    const std::function<double(std::int64_t)>& es_eval, double theta,
    std::int64_t k_max, std::int64_t eval_cap = 1000000000LL) {
    if (!(theta > 0.0)) throw std::domain_error("threshold_crossing_subsequence: need theta > 0");
    if (k_max < 2) throw std::domain_error("threshold_crossing_subsequence: need k_max >= 2");

    std::int64_t evals = 0;
    auto eval = [&](std::int64_t n) {
        if (++evals > eval_cap)
            throw resource_error("threshold_crossing_subsequence: evaluation cap exceeded");
        return es_eval(n);
    };

    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(k_max - 1));
    for (std::int64_t k = 2; k <= k_max; ++k) {
        const double threshold =
            std::exp(static_cast<double>(k) / std::pow(std::log(static_cast<double>(k)), theta));
        std::int64_t lo = 0, hi = 1;  // invariant: es_eval(lo) < threshold (lo=0 is virtual)
        while (eval(hi) < threshold) {
            lo = hi;
            if (hi > (std::int64_t{1} << 62))
                throw resource_error("threshold_crossing_subsequence: search overflow");
            hi *= 2;
        }
        while (hi - lo > 1) {
            const std::int64_t mid = lo + (hi - lo) / 2;
            if (eval(mid) < threshold)
                lo = mid;
            else
                hi = mid;
        }
        out.push_back(hi);
    }
    return out;
}

// Pointwise S_n / E S_n.
inline std::vector<double> normalized_sum_trajectory(const std::vector<double>& partial_sums,
                                                     const std::vector<double>& expected) {
    if (partial_sums.size() != expected.size())
        throw std::invalid_argument("normalized_sum_trajectory: length mismatch");
    std::vector<double> out(partial_sums.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (!(expected[i] > 0.0))
            throw std::domain_error("normalized_sum_trajectory: expected entries must be > 0");
        out[i] = partial_sums[i] / expected[i];
    }
    return out;
}

}  // namespace bclab::bc
