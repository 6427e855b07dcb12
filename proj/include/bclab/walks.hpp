#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bclab/errors.hpp"
#include "bclab/iterlog.hpp"
#include "bclab/parallel.hpp"
#include "bclab/rng.hpp"

// Lattice random walks and almost-sure local CLT machinery: exact probability
// kernels, Stirling / local-CLT approximations, the R-factor of the joint hit
// probability, subsequence validators, seeded hit simulation and the
// normalized quotient Delta, plus deviation envelopes.
namespace bclab::walks {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

inline double normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(kTwoPi); }

// ---------------------------------------------------------------------------
// Increment laws
// ---------------------------------------------------------------------------

enum class LawKind { simple, lattice, gaussian };

// Distribution of one walk step.  Lattice kinds live on h Z + b with h the
// maximal span; sigma is the standard deviation and third_abs_moment = E|X|^3.
class IncrementLaw {
public:
    LawKind kind = LawKind::simple;
    std::vector<std::pair<double, double>> support;  // (value, prob), lattice kinds
    double span_h = 0.0;
    double offset_b = 0.0;
    double sigma = 1.0;
    double third_abs_moment = 1.0;

    static IncrementLaw simple() {
        IncrementLaw law;
        law.kind = LawKind::simple;
        law.support = {{-1.0, 0.5}, {1.0, 0.5}};
        law.span_h = 2.0;
        law.offset_b = 1.0;
        law.sigma = 1.0;
        law.third_abs_moment = 1.0;
        law.finish_lattice();
        return law;
    }

    // General finite-support lattice law.  h and b are declared by the caller
    // and validated: every point must sit on h Z + b, and the integer offsets
    // must have gcd 1 (otherwise h is not the maximal span).
    static IncrementLaw lattice(std::vector<std::pair<double, double>> support_points,
                                double h, double b) {
        if (!(h > 0.0)) throw std::invalid_argument("IncrementLaw: need span h > 0");
        if (support_points.size() < 2)
            throw std::invalid_argument("IncrementLaw: need at least two support points");
        IncrementLaw law;
        law.kind = LawKind::lattice;
        law.support = std::move(support_points);
        law.span_h = h;
        law.offset_b = b;
        double mean = 0.0, m2 = 0.0, m3 = 0.0, psum = 0.0;
        for (auto& [v, p] : law.support) {
            if (!(p >= 0.0)) throw std::invalid_argument("IncrementLaw: negative probability");
            psum += p;
            mean += p * v;
            m2 += p * v * v;
            m3 += p * std::abs(v) * v * v;
        }
        if (std::abs(psum - 1.0) > 1e-12)
            throw std::invalid_argument("IncrementLaw: probabilities must sum to 1");
        if (std::abs(mean) > 1e-12)
            throw std::invalid_argument("IncrementLaw: mean must be 0");
        law.sigma = std::sqrt(m2);
        law.third_abs_moment = m3;
        law.finish_lattice();
        return law;
    }

    static IncrementLaw gaussian(double sigma = 1.0) {
        if (!(sigma > 0.0)) throw std::invalid_argument("IncrementLaw: need sigma > 0");
        IncrementLaw law;
        law.kind = LawKind::gaussian;
        law.span_h = 0.0;
        law.offset_b = 0.0;
        law.sigma = sigma;
        law.third_abs_moment = sigma * sigma * sigma * 2.0 * std::sqrt(2.0 / 3.14159265358979323846);
        return law;
    }

    bool is_lattice() const { return kind != LawKind::gaussian; }

    // Integer step offsets (v - b)/h, and cumulative probabilities for
    // inverse-CDF sampling.
    const std::vector<std::int64_t>& step_offsets() const { return steps_; }
    const std::vector<double>& cum_probs() const { return cum_; }

private:
    std::vector<std::int64_t> steps_;
    std::vector<double> cum_;

    void finish_lattice() {
        steps_.clear();
        cum_.clear();
        std::int64_t g = 0;
        double acc = 0.0;
        for (auto& [v, p] : support) {
            const double q = (v - offset_b) / span_h;
            const double r = std::round(q);
            if (std::abs(q - r) > 1e-9)
                throw std::invalid_argument("IncrementLaw: support point off the declared lattice");
            steps_.push_back(static_cast<std::int64_t>(r));
            acc += p;
            cum_.push_back(acc);
        }
        cum_.back() = 1.0;
        for (std::size_t j = 1; j < steps_.size(); ++j)
            g = std::gcd(g, std::llabs(steps_[j] - steps_[0]));
        if (g != 1)
            throw std::invalid_argument(
                "IncrementLaw: declared span is not maximal (a coarser sublattice carries mass 1)");
        // variance consistency with the support
        double m2 = 0.0;
        for (auto& [v, p] : support) m2 += p * v * v;
        if (std::abs(sigma * sigma - m2) > 1e-12)
            throw std::invalid_argument("IncrementLaw: sigma^2 inconsistent with support");
    }
};

// ---------------------------------------------------------------------------
// Lattice targets
// ---------------------------------------------------------------------------

// Integer lattice index of the resolved target: floor((c sqrt(n) - n b) / h).
// `c` is the full prefactor of sqrt(n); for level-a events of a walk with
// deviation sigma the caller passes c = a * sigma (the scaling is applied
// exactly once, at the call site of the walk-level helpers below).
inline std::int64_t resolve_target_steps(double c, std::int64_t n, const IncrementLaw& law) {
    return static_cast<std::int64_t>(std::floor(
        (c * std::sqrt(static_cast<double>(n)) - static_cast<double>(n) * law.offset_b) /
        law.span_h));
}

// The resolved lattice point itself: the largest point of the time-n lattice
// n b + h Z that does not exceed c sqrt(n).  For a gaussian law there is no
// lattice and the level c sqrt(n) is returned unchanged.
inline double resolve_lattice_target(double c, std::int64_t n, const IncrementLaw& law) {
    if (n < 1) throw std::domain_error("resolve_lattice_target: need n >= 1");
    if (!law.is_lattice()) return c * std::sqrt(static_cast<double>(n));
    return static_cast<double>(resolve_target_steps(c, n, law)) * law.span_h +
           static_cast<double>(n) * law.offset_b;
}

// Target level with its per-n resolution, mostly for reporting.
struct LatticeTarget {
    double a = 0.0;        // prefactor of sqrt(n) (already sigma-scaled)
    double resolved = 0.0; // lattice point at the queried n
};

inline LatticeTarget make_lattice_target(double c, std::int64_t n, const IncrementLaw& law) {
    return LatticeTarget{c, resolve_lattice_target(c, n, law)};
}

// ---------------------------------------------------------------------------
// Subsequences of checkpoint times
// ---------------------------------------------------------------------------

enum class SeqKind { poly2, geometric, loglog_exp, explicit_list };

// A strictly increasing sequence of positive integer times n_i, materialized
// as a prefix starting at subscript first_index.
struct SubsequenceSpec {
    SeqKind kind = SeqKind::explicit_list;
    std::int64_t first_index = 1;
    std::vector<std::int64_t> values;

    std::int64_t subscript(std::size_t pos) const {
        return first_index + static_cast<std::int64_t>(pos);
    }
    std::int64_t at_subscript(std::int64_t i) const {
        return values.at(static_cast<std::size_t>(i - first_index));
    }
    bool all_even() const {
        for (auto n : values)
            if (n % 2 != 0) return false;
        return true;
    }

    void validate() const {
        if (values.empty()) throw std::domain_error("SubsequenceSpec: empty materialized prefix");
        std::int64_t prev = 0;
        for (auto n : values) {
            if (n <= prev)
                throw std::invalid_argument("SubsequenceSpec: values must be strictly increasing and positive");
            prev = n;
        }
    }

    // n_i = c i^2
    static SubsequenceSpec poly2(std::int64_t c, std::int64_t count, std::int64_t i0 = 1) {
        if (c < 1 || count < 1 || i0 < 1) throw std::invalid_argument("poly2: bad parameters");
        SubsequenceSpec s;
        s.kind = SeqKind::poly2;
        s.first_index = i0;
        s.values.reserve(static_cast<std::size_t>(count));
        for (std::int64_t i = i0; i < i0 + count; ++i) s.values.push_back(c * i * i);
        s.validate();
        return s;
    }

    // n_i = round(c q^i)
    static SubsequenceSpec geometric(double c, double q, std::int64_t count, std::int64_t i0 = 1) {
        if (!(c > 0.0) || !(q > 1.0) || count < 1 || i0 >= 63)
            throw std::invalid_argument("geometric: bad parameters");
        SubsequenceSpec s;
        s.kind = SeqKind::geometric;
        s.first_index = i0;
        for (std::int64_t i = i0; i < i0 + count; ++i) {
            const double v = c * std::pow(q, static_cast<double>(i));
            if (v > 4.0e18) throw resource_error("geometric: value exceeds 64-bit range");
            s.values.push_back(std::llround(v));
        }
        s.validate();
        return s;
    }

    // n_i = floor(exp(A (log i)^2 (log log i)^alpha)); needs i0 >= 3 so the
    // inner log log is positive, and in practice a larger i0 so the prefix is
    // strictly increasing.
    static SubsequenceSpec loglog_exp(double A, double alpha, std::int64_t count,
                                      std::int64_t i0) {
        if (!(A > 0.0) || count < 1 || i0 < 3) throw std::invalid_argument("loglog_exp: bad parameters");
        SubsequenceSpec s;
        s.kind = SeqKind::loglog_exp;
        s.first_index = i0;
        for (std::int64_t i = i0; i < i0 + count; ++i) {
            const double li = std::log(static_cast<double>(i));
            const double arg = A * li * li * std::pow(std::log(li), alpha);
            if (arg > 43.0) throw resource_error("loglog_exp: value exceeds 64-bit range");
            s.values.push_back(static_cast<std::int64_t>(std::floor(std::exp(arg))));
        }
        s.validate();
        return s;
    }

    static SubsequenceSpec explicit_list(std::vector<std::int64_t> values, std::int64_t i0 = 1) {
        SubsequenceSpec s;
        s.kind = SeqKind::explicit_list;
        s.first_index = i0;
        s.values = std::move(values);
        s.validate();
        return s;
    }
};

struct SeqValidation {
    bool ok = true;
    std::optional<std::int64_t> first_violation;  // subscript i
    std::string condition;                        // which inequality failed
};

// Hypotheses for the sparse-lattice-subsequence law: a root-size gap
//   n_{i+1} - n_i >= A sqrt(n_i)
// and the polylog cap
//   n_i <= A^{-1} i^2 (log i) (log log i)^{-3} (log log log i)^{-2 gamma}.
// Evaluated over the materialized range for subscripts >= i_min (>= 16 so the
// triple log is defined); returns the actual boolean with a witness.
inline SeqValidation validate_lattice_subsequence(const SubsequenceSpec& seq, double A,
                                                  double gamma, std::int64_t i_min) {
    if (!(A > 0.0)) throw std::domain_error("validate_lattice_subsequence: need A > 0");
    if (!(gamma > 1.0)) throw std::domain_error("validate_lattice_subsequence: need gamma > 1");
    if (i_min < 16)
        throw std::domain_error("validate_lattice_subsequence: need i_min >= 16 (triple log)");
    seq.validate();
    const std::int64_t i_lo = std::max(i_min, seq.first_index);
    const std::int64_t i_hi = seq.first_index + static_cast<std::int64_t>(seq.values.size()) - 1;
    if (i_lo > i_hi)
        throw std::domain_error("validate_lattice_subsequence: no materialized subscripts >= i_min");
    for (std::int64_t i = i_lo; i <= i_hi; ++i) {
        const double ni = static_cast<double>(seq.at_subscript(i));
        const double di = static_cast<double>(i);
        const double cap = (1.0 / A) * di * di * std::log(di) *
                           std::pow(log2x(di), -3.0) * std::pow(log3x(di), -2.0 * gamma);
        if (!(ni <= cap)) return {false, i, "polylog cap"};
        if (i < i_hi) {
            const double gap = static_cast<double>(seq.at_subscript(i + 1)) - ni;
            if (!(gap >= A * std::sqrt(ni))) return {false, i, "root gap"};
        }
    }
    return {};
}

// Hypothesis for the density-law subsequences: the ratio growth
//   n_{i+1} / n_i >= 1 + A (log i) (log log i)^alpha / i.
inline SeqValidation validate_density_subsequence(const SubsequenceSpec& seq, double A,
                                                  double alpha, std::int64_t i_min) {
    if (!(A > 0.0)) throw std::domain_error("validate_density_subsequence: need A > 0");
    if (!(alpha > 2.0)) throw std::domain_error("validate_density_subsequence: need alpha > 2");
    if (i_min < 3) throw std::domain_error("validate_density_subsequence: need i_min >= 3");
    seq.validate();
    const std::int64_t i_lo = std::max(i_min, seq.first_index);
    const std::int64_t i_hi = seq.first_index + static_cast<std::int64_t>(seq.values.size()) - 1;
    if (i_lo > i_hi)
        throw std::domain_error("validate_density_subsequence: no materialized subscripts >= i_min");
    for (std::int64_t i = i_lo; i < i_hi; ++i) {
        const double di = static_cast<double>(i);
        const double need = 1.0 + A * std::log(di) * std::pow(log2x(di), alpha) / di;
        const double ratio = static_cast<double>(seq.at_subscript(i + 1)) /
                             static_cast<double>(seq.at_subscript(i));
        if (!(ratio >= need)) return {false, i, "ratio growth"};
    }
    return {};
}

// ---------------------------------------------------------------------------
// Exact kernels and asymptotics
// ---------------------------------------------------------------------------

inline bool simple_walk_parity_ok(std::int64_t n, std::int64_t target) {
    return ((n + target) % 2) == 0;
}

// P(S_n = target) for the +-1 walk, via log-gamma in long double.  Returns 0
// on parity mismatch or when |target| > n.
inline double exact_simple_walk_prob(std::int64_t n, std::int64_t target) {
    if (n < 1) throw std::domain_error("exact_simple_walk_prob: need n >= 1");
    if (std::llabs(target) > n) return 0.0;
    if (!simple_walk_parity_ok(n, target)) return 0.0;
    const std::int64_t k = (n + target) / 2;
    const long double logp = std::lgammal(static_cast<long double>(n) + 1.0L) -
                             std::lgammal(static_cast<long double>(k) + 1.0L) -
                             std::lgammal(static_cast<long double>(n - k) + 1.0L) -
                             static_cast<long double>(n) * 0.6931471805599453094172321214581766L;
    return static_cast<double>(std::expl(logp));
}

// Exact P(S_n = target) for a finite-support lattice law by n-fold dense
// convolution over the step lattice.  Zero if the target is off the time-n
// lattice.  Guarded by a cell/work budget; this is a desk-scale oracle.
inline double exact_lattice_walk_prob(const IncrementLaw& law, std::int64_t n, double target) {
    if (!law.is_lattice())
        throw unsupported_error("exact_lattice_walk_prob: law must be a lattice kind");
    if (n < 1) throw std::domain_error("exact_lattice_walk_prob: need n >= 1");

    const auto& steps = law.step_offsets();
    const std::int64_t k_min = *std::min_element(steps.begin(), steps.end());
    const std::int64_t k_max = *std::max_element(steps.begin(), steps.end());
    const std::int64_t width = k_max - k_min;
    const std::int64_t cells = n * width + 1;
    if (cells > 4'000'000 ||
        static_cast<double>(n) * static_cast<double>(cells) * static_cast<double>(steps.size()) > 2.0e10)
        throw resource_error("exact_lattice_walk_prob: convolution budget exceeded");

    // Integer index of the target on the time-n lattice n b + h Z.
    const double mq = (target - static_cast<double>(n) * law.offset_b) / law.span_h;
    const double mr = std::round(mq);
    if (std::abs(mq - mr) > 1e-9) return 0.0;  // off-lattice
    const std::int64_t m = static_cast<std::int64_t>(mr);
    if (m < n * k_min || m > n * k_max) return 0.0;

    std::vector<double> dist(static_cast<std::size_t>(cells), 0.0), next(static_cast<std::size_t>(cells), 0.0);
    dist[0] = 1.0;  // time 0: offset sum 0, stored at index -0*k_min = 0
    std::int64_t reach = 0;  // indices [0, reach*width] are populated
    for (std::int64_t t = 1; t <= n; ++t) {
        const std::int64_t hi = reach * width + width;  // new populated upper index
        std::fill(next.begin(), next.begin() + hi + 1, 0.0);
        for (std::size_t j = 0; j < steps.size(); ++j) {
            const std::int64_t off = steps[j] - k_min;  // in [0, width]
            const double p = law.support[j].second;
            if (p == 0.0) continue;
            const std::int64_t top = reach * width;
            for (std::int64_t idx = 0; idx <= top; ++idx)
                next[static_cast<std::size_t>(idx + off)] += p * dist[static_cast<std::size_t>(idx)];
        }
        dist.swap(next);
        ++reach;
    }
    const std::int64_t idx = m - n * k_min;
    return dist[static_cast<std::size_t>(idx)];
}

// Leading-order hit probability sqrt(2/pi) n^{-1/2} e^{-a^2/2} of the simple
// walk at level a sqrt(n), from Stirling's formula.
inline double stirling_asymptotic(std::int64_t n, double a) {
    if (n < 1) throw std::domain_error("stirling_asymptotic: need n >= 1");
    return std::sqrt(2.0 / 3.14159265358979323846) / std::sqrt(static_cast<double>(n)) *
           std::exp(-0.5 * a * a);
}

// First-order local CLT value at the resolved level a sigma sqrt(n):
// lattice laws  ->  h / (sqrt(2 pi n) sigma) e^{-a^2/2};
// gaussian law  ->  (1/sqrt(2 pi)) e^{-a^2/2}  (normalized-density convention,
// independent of n).
inline double local_clt_value(const IncrementLaw& law, std::int64_t n, double a) {
    if (n < 1) throw std::domain_error("local_clt_value: need n >= 1");
    if (law.is_lattice())
        return law.span_h / (std::sqrt(kTwoPi * static_cast<double>(n)) * law.sigma) *
               std::exp(-0.5 * a * a);
    return normal_pdf(a);
}

// Leading factor exp(a^2 sqrt(n_i) / (sqrt(n_j) + sqrt(n_i))) of the
// joint/product hit-probability ratio R.  The neglected correction is
// O(1/sqrt(n_j - n_i)) and needs n_j large relative to |a|^6 to be small;
// callers treat this as a validity-range note, not a runtime check.
inline double r_factor(double a, std::int64_t n_i, std::int64_t n_j) {
    if (!(n_j > n_i) || n_i < 1) throw std::domain_error("r_factor: need n_j > n_i >= 1");
    const double si = std::sqrt(static_cast<double>(n_i));
    const double sj = std::sqrt(static_cast<double>(n_j));
    return std::exp(a * a * si / (sj + si));
}

struct JointOraclePair {
    double lhs = 0.0;  // exact joint/product ratio from normalized gaussian densities
    double rhs = 0.0;  // closed-form R factor
};

// For gaussian increments the joint/product ratio is exactly
// phi(a) phi(a t) / phi(a)^2 with t = sqrt(n_j - n_i) / (sqrt(n_j) + sqrt(n_i)),
// and the identity 1 - t^2 = 2 sqrt(n_i) / (sqrt(n_j) + sqrt(n_i)) makes it
// equal to the R factor.  Both routes are computed independently.
inline JointOraclePair gaussian_joint_oracle(double a, std::int64_t n_i, std::int64_t n_j) {
    if (!(n_j > n_i) || n_i < 1) throw std::domain_error("gaussian_joint_oracle: need n_j > n_i >= 1");
    const double si = std::sqrt(static_cast<double>(n_i));
    const double sj = std::sqrt(static_cast<double>(n_j));
    const double t = std::sqrt(static_cast<double>(n_j - n_i)) / (sj + si);
    JointOraclePair out;
    out.lhs = normal_pdf(a) * normal_pdf(a * t) / (normal_pdf(a) * normal_pdf(a));
    out.rhs = r_factor(a, n_i, n_j);
    return out;
}

// ---------------------------------------------------------------------------
// Seeded simulation
// ---------------------------------------------------------------------------

namespace detail {

// Walks the integer step-offset sum between checkpoints.  One RNG word per
// step; the simple law uses the top bit, general laws invert the CDF.
class LatticeWalker {
public:
    LatticeWalker(const IncrementLaw& law, std::uint64_t master, std::uint64_t stream)
        : law_(law), rng_(master, stream) {}

    void advance_to(std::int64_t n) {
        if (law_.kind == LawKind::simple) {
            while (t_ < n) {
                m_ -= static_cast<std::int64_t>(rng_.next_u64() >> 63);
                ++t_;
            }
            return;
        }
        const auto& cum = law_.cum_probs();
        const auto& steps = law_.step_offsets();
        while (t_ < n) {
            const double u = rng_.next_unit();
            std::size_t j = 0;
            while (j + 1 < cum.size() && u >= cum[j]) ++j;
            m_ += steps[j];
            ++t_;
        }
    }

    std::int64_t offset_sum() const { return m_; }
    std::int64_t time() const { return t_; }

private:
    const IncrementLaw& law_;
    CounterRng rng_;
    std::int64_t t_ = 0;
    std::int64_t m_ = 0;
};

}  // namespace detail

// One seeded trajectory of the events S_{n_i} = a sigma sqrt(n_i): indicator
// per checkpoint.  Deterministic in (master, stream).  Lattice laws only; for
// continuous laws the event has probability zero and the density oracles
// (gaussian_joint_oracle, local_clt_value) are the meaningful route.
inline std::vector<std::uint8_t> simulate_walk_hits(const IncrementLaw& law,
                                                    const SubsequenceSpec& seq, double a,
                                                    std::uint64_t master_seed,
                                                    std::uint64_t stream = 0) {
    if (!law.is_lattice())
        throw unsupported_error(
            "simulate_walk_hits: exact-equality events have probability zero for continuous "
            "laws; use the density oracle path");
    seq.validate();
    if (law.kind == LawKind::simple && !seq.all_even())
        throw std::invalid_argument(
            "simulate_walk_hits: simple-walk checkpoints must be even");
    const double c = a * law.sigma;
    detail::LatticeWalker walker(law, master_seed, stream);
    std::vector<std::uint8_t> hits(seq.values.size(), 0);
    for (std::size_t k = 0; k < seq.values.size(); ++k) {
        walker.advance_to(seq.values[k]);
        hits[k] = (walker.offset_sum() == resolve_target_steps(c, seq.values[k], law)) ? 1 : 0;
    }
    return hits;
}

// Normalized quotient Delta = (hits / normalizer) / (h e^{-a^2/2} / (sqrt(2 pi) sigma)),
// with normalizer = sum of n_i^{-1/2} over the counted checkpoints.  `hits`
// may be a fractional count (e.g. a sum of exact expectations).
inline double delta_n(double hits, double normalizer, const IncrementLaw& law, double a) {
    if (!law.is_lattice()) throw unsupported_error("delta_n: defined for lattice laws");
    if (!(normalizer > 0.0)) throw std::domain_error("delta_n: need normalizer > 0");
    const double limit = law.span_h * std::exp(-0.5 * a * a) / (std::sqrt(kTwoPi) * law.sigma);
    return hits / normalizer / limit;
}

// Ensemble of seeded trajectories with cumulative hit counts and Delta values
// at every checkpoint.  Trajectory t uses stream t; reductions are per-slot,
// so results are independent of the worker count.
struct WalkEnsembleResult {
    std::vector<std::int64_t> checkpoints;        // n_i
    std::vector<double> normalizer_prefix;        // sum_{j<=i} n_j^{-1/2}
    double limit_value = 0.0;                     // h e^{-a^2/2} / (sqrt(2 pi) sigma)
    std::vector<std::vector<std::int32_t>> hits;  // [trajectory][checkpoint], cumulative
    std::uint64_t master_seed = 0;
    double a = 0.0;

    double delta(std::size_t traj, std::size_t k) const {
        return static_cast<double>(hits[traj][k]) / normalizer_prefix[k] / limit_value;
    }
    std::vector<double> deltas_at(std::size_t k) const {
        std::vector<double> out(hits.size());
        for (std::size_t t = 0; t < hits.size(); ++t) out[t] = delta(t, k);
        return out;
    }
};

inline WalkEnsembleResult run_walk_ensemble(const IncrementLaw& law, const SubsequenceSpec& seq,
                                            double a, std::uint64_t master_seed,
                                            std::int64_t n_trajectories, int workers) {
    if (n_trajectories < 1) throw std::invalid_argument("run_walk_ensemble: need trajectories");
    WalkEnsembleResult res;
    res.checkpoints = seq.values;
    res.master_seed = master_seed;
    res.a = a;
    res.normalizer_prefix.resize(seq.values.size());
    double acc = 0.0;
    for (std::size_t k = 0; k < seq.values.size(); ++k) {
        acc += 1.0 / std::sqrt(static_cast<double>(seq.values[k]));
        res.normalizer_prefix[k] = acc;
    }
    res.limit_value = law.span_h * std::exp(-0.5 * a * a) / (std::sqrt(kTwoPi) * law.sigma);
    res.hits.assign(static_cast<std::size_t>(n_trajectories), {});
    parallel_for(n_trajectories, workers, [&](std::int64_t t) {
        const auto ind = simulate_walk_hits(law, seq, a, master_seed,
                                            static_cast<std::uint64_t>(t));
        std::vector<std::int32_t> cum(ind.size());
        std::int32_t s = 0;
        for (std::size_t k = 0; k < ind.size(); ++k) {
            s += ind[k];
            cum[k] = s;
        }
        res.hits[static_cast<std::size_t>(t)] = std::move(cum);
    });
    return res;
}

// Full-sum ASLCLT statistic for one trajectory:
//   (1 / log N) * sum_{k<=N} 1{S_k = resolved level} k^{-1/2}.
// Every k counts; at times whose lattice misses the level exactly, the
// resolved point is the nearest lattice point below, per the target
// convention above.
inline double aslclt_statistic(const IncrementLaw& law, std::int64_t N, double a,
                               std::uint64_t master_seed, std::uint64_t stream = 0) {
    if (!law.is_lattice()) throw unsupported_error("aslclt_statistic: lattice laws only");
    if (N < 2) throw std::domain_error("aslclt_statistic: need N >= 2");
    const double c = a * law.sigma;
    detail::LatticeWalker walker(law, master_seed, stream);
    double sum = 0.0;
    for (std::int64_t k = 1; k <= N; ++k) {
        walker.advance_to(k);
        if (walker.offset_sum() == resolve_target_steps(c, k, law))
            sum += 1.0 / std::sqrt(static_cast<double>(k));
    }
    return sum / std::log(static_cast<double>(N));
}

// Expectation of the ASLCLT statistic for the simple walk, from exact
// binomials: (1 / log N) sum_k P(S_k = resolved level) k^{-1/2}.
inline double aslclt_exact_expectation_simple(std::int64_t N, double a) {
    if (N < 2) throw std::domain_error("aslclt_exact_expectation_simple: need N >= 2");
    const IncrementLaw law = IncrementLaw::simple();
    double sum = 0.0;
    for (std::int64_t k = 1; k <= N; ++k) {
        const std::int64_t m = resolve_target_steps(a, k, law);
        const std::int64_t target = 2 * m + k;  // lattice point value
        sum += exact_simple_walk_prob(k, target) / std::sqrt(static_cast<double>(k));
    }
    return sum / std::log(static_cast<double>(N));
}

// ---------------------------------------------------------------------------
// Deviation envelopes
// ---------------------------------------------------------------------------

// Tail envelope for sparse lattice subsequences:
//   C eps^{-2} (log log n)^{-1} (log log log n)^{-gamma}.
// Defined for n > e^(e^e); the bound is asymptotic and the constant is
// existential, so comparisons against it warn rather than fail.
inline double deviation_envelope_lattice(double eps, double n, double gamma, double C = 1.0) {
    if (!(eps > 0.0)) throw std::domain_error("deviation_envelope_lattice: need eps > 0");
    if (!(n > kEEE))
        throw std::domain_error("deviation_envelope_lattice: need n > e^(e^e)");
    return C / (eps * eps) / log2x(n) * std::pow(log3x(n), -gamma);
}

// Tail envelope for density-law subsequences:
//   C eps^{-2} (log n)^{-1} (log log n)^{1-alpha},  defined for n > e^e.
inline double deviation_envelope_density(double eps, double n, double alpha, double C = 1.0) {
    if (!(eps > 0.0)) throw std::domain_error("deviation_envelope_density: need eps > 0");
    if (!(n > kEE)) throw std::domain_error("deviation_envelope_density: need n > e^e");
    return C / (eps * eps) / std::log(n) * std::pow(log2x(n), 1.0 - alpha);
}

}  // namespace bclab::walks
