#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bclab/errors.hpp"
#include "bclab/fixed256.hpp"
#include "bclab/parallel.hpp"
#include "bclab/rng.hpp"
#include "bclab/staircase.hpp"

// Concrete measure-preserving systems with metric structure: invariant-measure
// samplers, exact or estimated ball measures, annulus-regularity estimation
// (the Holder control used by indicator mollification), orbit iteration, and
// empirical decay-of-correlations estimation for Lipschitz observables.
namespace bclab::dynsys {

// ---------------------------------------------------------------------------
// State space
// ---------------------------------------------------------------------------

struct Point {
    double x = 0.0;
    double y = 0.0;
};

enum class MetricKind { interval, circle, euclidean2 };

inline double metric_distance(MetricKind m, const Point& a, const Point& b) {
    switch (m) {
        case MetricKind::interval:
            return std::abs(a.x - b.x);
        case MetricKind::circle: {
            const double d = std::abs(a.x - b.x);
            return std::min(d, 1.0 - d);
        }
        case MetricKind::euclidean2:
        default: {
            const double dx = a.x - b.x, dy = a.y - b.y;
            return std::sqrt(dx * dx + dy * dy);
        }
    }
}

// Radius at which every ball saturates the space.
inline double metric_max_radius(MetricKind m) {
    switch (m) {
        case MetricKind::interval: return 1.0;
        case MetricKind::circle: return 0.5;
        case MetricKind::euclidean2:
        default: return 1.4142135623730951;
    }
}

struct DecayClass {
    enum class Kind { polynomial, beta_exponential };
    Kind kind = Kind::polynomial;
    double alpha = 1.0;  // rate
    double beta = 1.0;   // stretching exponent (beta_exponential only)

    static DecayClass polynomial(double alpha) { return {Kind::polynomial, alpha, 1.0}; }
    static DecayClass beta_exponential(double alpha, double beta) {
        return {Kind::beta_exponential, alpha, beta};
    }
};

// ---------------------------------------------------------------------------
// Orbits
// ---------------------------------------------------------------------------

// Streaming orbit: value() is the current point, advance() applies the map
// once.  O(1) state per consumer.
class Orbit {
public:
    virtual ~Orbit() = default;
    virtual Point value() const = 0;
    virtual void advance() = 0;
};

namespace detail {

// Orbit of the digit-shift maps started from a random digit string: position
// n reads digits n, n+1, ... of the stream, which is exactly the n-th image
// of the sampled point.  No precision loss at any orbit length.
class BitShiftOrbit final : public Orbit {
public:
    BitShiftOrbit(std::uint64_t master, std::uint64_t stream) : bits_(master, stream) {}
    Point value() const override { return {bits_.value_at(pos_), 0.0}; }
    void advance() override { ++pos_; }

private:
    BitStream bits_;
    std::uint64_t pos_ = 0;
};

// Same idea on the ternary shift restricted to digits {0, 2}: the digit
// string of a Cantor-measure-distributed point is an i.i.d. fair choice of
// {0, 2}, one random bit per digit.
class TritShiftOrbit final : public Orbit {
public:
    TritShiftOrbit(std::uint64_t master, std::uint64_t stream) : bits_(master, stream) {}
    Point value() const override {
        const std::uint64_t w = bits_.window64(pos_);
        double v = 0.0;
        for (int j = 39; j >= 0; --j) {
            const double trit = 2.0 * static_cast<double>((w >> (63 - j)) & 1u);
            v = (v + trit) / 3.0;
        }
        return {v, 0.0};
    }
    void advance() override { ++pos_; }

private:
    BitStream bits_;
    std::uint64_t pos_ = 0;
};

// High-precision orbit from an explicit starting point for x -> 2x or 3x
// (mod 1); 256 bits give a faithful runway of about 200 (resp. 160) steps.
class ShiftPointOrbit final : public Orbit {
public:
    ShiftPointOrbit(const Fixed256& x0, int multiplier) : x_(x0), mult_(multiplier) {}
    Point value() const override { return {x_.to_double(), 0.0}; }
    void advance() override {
        if (mult_ == 2)
            x_.times2_mod1();
        else
            x_.times3_mod1();
    }

private:
    Fixed256 x_;
    int mult_;
};

class MpOrbit final : public Orbit {
public:
    MpOrbit(double x0, double s) : x_(x0), s_(s) {}
    Point value() const override { return {x_, 0.0}; }
    void advance() override {
        double t = x_ + std::pow(x_, 1.0 + s_);
        if (t >= 1.0) t -= 1.0;
        if (t >= 1.0 || t < 0.0) t -= std::floor(t);
        x_ = t;
    }

private:
    double x_;
    double s_;
};

class ProductOrbit final : public Orbit {
public:
    ProductOrbit(std::unique_ptr<Orbit> ox, std::unique_ptr<Orbit> oy)
        : ox_(std::move(ox)), oy_(std::move(oy)) {}
    Point value() const override { return {ox_->value().x, oy_->value().x}; }
    void advance() override {
        ox_->advance();
        oy_->advance();
    }

private:
    std::unique_ptr<Orbit> ox_, oy_;
};

// Lazily built occupation sample for systems whose invariant density has no
// closed form.  A single long orbit from a fixed internal seed is recorded
// after burn-in and sorted; ball measures are empirical frequencies.
class OccupationCache {
public:
    OccupationCache(double s, std::int64_t burn_in, std::int64_t n_points)
        : s_(s), burn_(burn_in), n_(n_points) {}

    double measure(double center, double r) const {
        std::call_once(once_, [this] { build(); });
        const double lo = center - r, hi = center + r;
        const auto a = std::lower_bound(pts_.begin(), pts_.end(), lo);
        const auto b = std::upper_bound(pts_.begin(), pts_.end(), hi);
        return static_cast<double>(b - a) / static_cast<double>(pts_.size());
    }

private:
    void build() const {
        CounterRng rng(0x4D50u, 0);  // fixed internal stream: estimates are reproducible
        MpOrbit orbit(0.5 + 0.499 * (2.0 * rng.next_unit() - 1.0), s_);
        for (std::int64_t i = 0; i < burn_; ++i) orbit.advance();
        pts_.resize(static_cast<std::size_t>(n_));
        for (auto& p : pts_) {
            p = orbit.value().x;
            orbit.advance();
        }
        std::sort(pts_.begin(), pts_.end());
    }

    double s_;
    std::int64_t burn_, n_;
    mutable std::once_flag once_;
    mutable std::vector<double> pts_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Systems
// ---------------------------------------------------------------------------

// A map on a metric space with invariant-measure access and a declared
// decay-of-correlations class.  Immutable after construction; samplers take
// explicit (master, stream) seeds.
struct MapSystem {
    std::string name;
    MetricKind metric = MetricKind::interval;
    int dim = 1;
    DecayClass decay;
    std::optional<double> holder_delta;  // annulus-regularity exponent, when known
    double condition_a_constant = 0.0;   // annulus envelope constant C (0 = undeclared)
    bool exact_measure = true;

    std::function<Point(Point)> map_point;
    std::function<double(const Point&, double)> ball_measure;  // closed balls
    std::function<std::unique_ptr<Orbit>(std::uint64_t, std::uint64_t)> sample_orbit;
    std::function<std::unique_ptr<Orbit>(const Fixed256&)> point_orbit;  // null if unsupported

    double max_radius() const { return metric_max_radius(metric); }

    double distance(const Point& a, const Point& b) const {
        return metric_distance(metric, a, b);
    }
};

// x -> 2x mod 1 on the circle with Lebesgue measure.  Annuli have measure
// exactly 2 eps (two arcs), so the annulus envelope constant is 2 at
// exponent 1.
inline MapSystem doubling_system() {
    MapSystem s;
    s.name = "doubling";
    s.metric = MetricKind::circle;
    s.decay = DecayClass::beta_exponential(0.6931471805599453, 1.0);
    s.holder_delta = 1.0;
    s.condition_a_constant = 2.0;
    s.exact_measure = true;
    s.map_point = [](Point p) {
        double t = 2.0 * p.x;
        if (t >= 1.0) t -= 1.0;
        return Point{t, 0.0};
    };
    s.ball_measure = [](const Point&, double r) {
        if (r <= 0.0) return 0.0;
        return std::min(1.0, 2.0 * r);
    };
    s.sample_orbit = [](std::uint64_t master, std::uint64_t stream) -> std::unique_ptr<Orbit> {
        return std::make_unique<detail::BitShiftOrbit>(master, stream);
    };
    s.point_orbit = [](const Fixed256& x0) -> std::unique_ptr<Orbit> {
        return std::make_unique<detail::ShiftPointOrbit>(x0, 2);
    };
    return s;
}

// x -> 3x mod 1 restricted to the middle-third Cantor set, with the Cantor
// measure; ball measures evaluate the staircase.  Closed-ball convention at
// the endpoints.
inline MapSystem tripling_cantor_system() {
    MapSystem s;
    s.name = "tripling_cantor";
    s.metric = MetricKind::interval;
    s.decay = DecayClass::beta_exponential(1.0986122886681098, 1.0);
    s.holder_delta = 0.6309297535714574;  // log 2 / log 3
    s.condition_a_constant = 2.0;
    s.exact_measure = true;
    s.map_point = [](Point p) {
        double t = 3.0 * p.x;
        t -= std::floor(t);
        return Point{t, 0.0};
    };
    s.ball_measure = [](const Point& c, double r) {
        if (r <= 0.0) return 0.0;
        return devil_staircase(std::min(c.x + r, 1.0)) - devil_staircase(std::max(c.x - r, 0.0));
    };
    s.sample_orbit = [](std::uint64_t master, std::uint64_t stream) -> std::unique_ptr<Orbit> {
        return std::make_unique<detail::TritShiftOrbit>(master, stream);
    };
    s.point_orbit = [](const Fixed256& x0) -> std::unique_ptr<Orbit> {
        return std::make_unique<detail::ShiftPointOrbit>(x0, 3);
    };
    return s;
}

// x -> x + x^{1+s} mod 1 (0 < s < 1): neutral fixed point at 0, polynomial
// decay of correlations with rate 1/s - 1.  The invariant density has no
// closed form: sampling uses a burn-in orbit from a Lebesgue-random start and
// ball measures are empirical occupation frequencies (estimated, flagged).
inline MapSystem manneville_pomeau_system(double s_param, std::int64_t burn_in = 10000,
                                          std::int64_t occupation_points = 200000) {
    if (!(s_param > 0.0 && s_param < 1.0))
        throw std::domain_error("manneville_pomeau_system: need 0 < s < 1");
    MapSystem s;
    s.name = "manneville_pomeau";
    s.metric = MetricKind::interval;
    s.decay = DecayClass::polynomial(1.0 / s_param - 1.0);
    s.holder_delta = std::nullopt;
    s.condition_a_constant = 0.0;
    s.exact_measure = false;
    const double sp = s_param;
    s.map_point = [sp](Point p) {
        double t = p.x + std::pow(p.x, 1.0 + sp);
        if (t >= 1.0) t -= 1.0;
        if (t >= 1.0 || t < 0.0) t -= std::floor(t);
        return Point{t, 0.0};
    };
    auto cache = std::make_shared<detail::OccupationCache>(sp, burn_in, occupation_points);
    s.ball_measure = [cache](const Point& c, double r) {
        if (r <= 0.0) return 0.0;
        return cache->measure(c.x, r);
    };
    const std::int64_t burn = burn_in;
    s.sample_orbit = [sp, burn](std::uint64_t master,
                                std::uint64_t stream) -> std::unique_ptr<Orbit> {
        CounterRng rng(master, stream);
        auto orbit = std::make_unique<detail::MpOrbit>(rng.next_unit(), sp);
        for (std::int64_t i = 0; i < burn; ++i) orbit->advance();
        return orbit;
    };
    s.point_orbit = [sp](const Fixed256& x0) -> std::unique_ptr<Orbit> {
        return std::make_unique<detail::MpOrbit>(x0.to_double(), sp);
    };
    return s;
}

// Product of the two digit shifts on [0,1]^2 with mu = Lebesgue x Cantor and
// the Euclidean metric.  Fiber slices of an annulus have length O(sqrt(eps))
// near the tangent heights, so the guaranteed annulus exponent is 1/2 (the
// measured exponent at a generic center is better).  Ball measures integrate
// the chord length against the Cantor factor by a Stieltjes sum on a fixed
// grid (deterministic; resolution ~1e-7 of total mass).
inline MapSystem product_example_system() {
    MapSystem s;
    s.name = "product_example";
    s.metric = MetricKind::euclidean2;
    s.dim = 2;
    s.decay = DecayClass::beta_exponential(0.6931471805599453, 1.0);
    s.holder_delta = 0.5;
    s.condition_a_constant = 4.0;
    s.exact_measure = true;
    s.map_point = [](Point p) {
        double tx = 2.0 * p.x;
        if (tx >= 1.0) tx -= 1.0;
        double ty = 3.0 * p.y;
        ty -= std::floor(ty);
        return Point{tx, ty};
    };
    s.ball_measure = [](const Point& c, double r) {
        if (r <= 0.0) return 0.0;
        const double ylo = std::max(0.0, c.y - r), yhi = std::min(1.0, c.y + r);
        if (ylo >= yhi) return 0.0;
        const int m = 4000;
        double acc = 0.0;
        double fl = devil_staircase(ylo);
        for (int j = 0; j < m; ++j) {
            const double b = ylo + (yhi - ylo) * (j + 1) / m;
            const double mid = ylo + (yhi - ylo) * (j + 0.5) / m;
            const double fr = devil_staircase(b);
            const double dy = mid - c.y;
            const double disc = r * r - dy * dy;
            if (disc > 0.0) {
                const double w = std::sqrt(disc);
                const double len = std::min(1.0, c.x + w) - std::max(0.0, c.x - w);
                if (len > 0.0) acc += len * (fr - fl);
            }
            fl = fr;
        }
        return acc;
    };
    s.sample_orbit = [](std::uint64_t master, std::uint64_t stream) -> std::unique_ptr<Orbit> {
        return std::make_unique<detail::ProductOrbit>(
            std::make_unique<detail::BitShiftOrbit>(master, 2 * stream),
            std::make_unique<detail::TritShiftOrbit>(master, 2 * stream + 1));
    };
    s.point_orbit = nullptr;
    return s;
}

// Factory by name, for configuration files.
inline MapSystem builtin_system(const std::string& name, double param = 0.5) {
    if (name == "doubling") return doubling_system();
    if (name == "tripling_cantor") return tripling_cantor_system();
    if (name == "manneville_pomeau") return manneville_pomeau_system(param);
    if (name == "product_example") return product_example_system();
    throw std::domain_error("builtin_system: unknown system '" + name + "'");
}

// Streaming iteration from an explicit starting point.  The returned orbit is
// positioned at x; advance() yields T x, T^2 x, ...
inline std::unique_ptr<Orbit> iterate_orbit(const MapSystem& sys, const Fixed256& x0) {
    if (!sys.point_orbit)
        throw unsupported_error("iterate_orbit: system '" + sys.name +
                                "' has no explicit-point orbit");
    return sys.point_orbit(x0);
}

// ---------------------------------------------------------------------------
// Annulus regularity (Holder control of ball-measure increments)
// ---------------------------------------------------------------------------

struct ConditionAFit {
    double delta_hat = 0.0;  // fitted exponent of the annulus-measure envelope
    double c_hat = 0.0;      // intercept-derived constant
    std::size_t used_points = 0;
    std::size_t zero_annuli = 0;
    double eps_min = 0.0, eps_max = 0.0;  // fit range actually used
    double r_max = 0.0;
};

// Estimates (C, delta) such that mu{ r < d(x, x0) < r + eps } <~ C eps^delta:
// for each eps the annulus measure is maximized over the radius grid (the
// control is uniform in r), and log envelope is regressed on log eps.
// Pairs whose outer ball saturates the space are skipped, as are zero annuli
// (counted).  The scale r0 is chosen by the caller through the radius grid.
inline ConditionAFit check_condition_A(const MapSystem& sys, const Point& x0,
                                       const std::vector<double>& radii,
                                       const std::vector<double>& epsilons) {
    if (radii.empty() || epsilons.empty())
        throw std::invalid_argument("check_condition_A: empty grid");
    ConditionAFit fit;
    std::vector<double> lx, ly;
    for (double eps : epsilons) {
        if (!(eps > 0.0) || eps > 1.0)
            throw std::domain_error("check_condition_A: need 0 < eps <= 1");
        double env = 0.0;
        bool any = false;
        for (double r : radii) {
            if (r < 0.0) throw std::domain_error("check_condition_A: need r >= 0");
            const double outer = sys.ball_measure(x0, r + eps);
            if (outer >= 1.0) continue;  // saturated ball: not an annulus
            const double inner = r > 0.0 ? sys.ball_measure(x0, r) : 0.0;
            env = std::max(env, outer - inner);
            any = true;
        }
        if (!any) continue;
        if (env <= 0.0) {
            ++fit.zero_annuli;
            continue;
        }
        lx.push_back(std::log(eps));
        ly.push_back(std::log(env));
        fit.eps_min = fit.eps_min == 0.0 ? eps : std::min(fit.eps_min, eps);
        fit.eps_max = std::max(fit.eps_max, eps);
    }
    if (lx.size() < 2)
        throw degenerate_fit_error(
            "check_condition_A: fewer than two usable annulus envelopes (zero annuli: " +
            std::to_string(fit.zero_annuli) + ")");
    const std::size_t n = lx.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    const double det = n * sxx - sx * sx;
    if (det == 0.0) throw degenerate_fit_error("check_condition_A: degenerate abscissa grid");
    fit.delta_hat = (n * sxy - sx * sy) / det;
    fit.c_hat = std::exp((sy - fit.delta_hat * sx) / n);
    fit.used_points = n;
    fit.r_max = *std::max_element(radii.begin(), radii.end());
    return fit;
}

// ---------------------------------------------------------------------------
// Correlations
// ---------------------------------------------------------------------------

struct LipObservable {
    std::string name;
    std::function<double(const Point&)> f;
    double lip_bound = 1.0;  // declared, w.r.t. the interval metric
};

inline LipObservable identity_observable() {
    return {"identity", [](const Point& p) { return p.x; }, 1.0};
}

inline LipObservable cos_observable(int k = 1) {
    const double w = 2.0 * 3.14159265358979323846 * k;
    return {"cos" + std::to_string(k), [w](const Point& p) { return std::cos(w * p.x); }, w};
}

struct CorrelationEstimate {
    std::int64_t lag = 0;
    double value = 0.0;      // cov(phi o T^lag, psi)
    double std_error = 0.0;  // batch-means standard error
};

// Monte Carlo covariance at the requested lags: samples x ~ mu, averages
// phi(T^n x) psi(x) minus the product of the marginal averages.  Samples are
// split into fixed index batches; the batch spread gives the standard error
// and the batch structure (not the thread schedule) defines the arithmetic,
// so results are worker-count independent.
inline std::vector<CorrelationEstimate> estimate_correlation(
    const MapSystem& sys, const LipObservable& phi, const LipObservable& psi,
    const std::vector<std::int64_t>& lags, std::int64_t n_samples, std::uint64_t master_seed,
    int workers = 1, int n_batches = 64) {
    if (!sys.sample_orbit)
        throw unsupported_error("estimate_correlation: system has no measure sampler");
    if (lags.empty() || n_samples < n_batches || n_batches < 2)
        throw std::invalid_argument("estimate_correlation: bad sampling plan");
    for (auto l : lags)
        if (l < 0) throw std::domain_error("estimate_correlation: need lag >= 0");
    const std::int64_t max_lag = *std::max_element(lags.begin(), lags.end());
    const std::size_t L = lags.size();

    struct BatchSums {
        std::vector<double> prod, phi_mean;
        double psi_sum = 0.0;
        std::int64_t count = 0;
    };
    std::vector<BatchSums> batches(static_cast<std::size_t>(n_batches));
    for (auto& b : batches) {
        b.prod.assign(L, 0.0);
        b.phi_mean.assign(L, 0.0);
    }

    parallel_for(n_batches, workers, [&](std::int64_t bi) {
        auto& b = batches[static_cast<std::size_t>(bi)];
        const std::int64_t lo = n_samples * bi / n_batches;
        const std::int64_t hi = n_samples * (bi + 1) / n_batches;
        std::vector<double> phival(static_cast<std::size_t>(max_lag) + 1);
        for (std::int64_t j = lo; j < hi; ++j) {
            auto orbit = sys.sample_orbit(master_seed, static_cast<std::uint64_t>(j));
            const Point x0 = orbit->value();
            const double p0 = psi.f(x0);
            for (std::int64_t n = 0; n <= max_lag; ++n) {
                phival[static_cast<std::size_t>(n)] = phi.f(orbit->value());
                if (n < max_lag) orbit->advance();
            }
            b.psi_sum += p0;
            for (std::size_t k = 0; k < L; ++k) {
                const double pv = phival[static_cast<std::size_t>(lags[k])];
                b.prod[k] += pv * p0;
                b.phi_mean[k] += pv;
            }
        }
        b.count = hi - lo;
    });

    std::vector<CorrelationEstimate> out(L);
    for (std::size_t k = 0; k < L; ++k) {
        double prod = 0.0, phis = 0.0, psis = 0.0;
        std::int64_t cnt = 0;
        for (auto& b : batches) {
            prod += b.prod[k];
            phis += b.phi_mean[k];
            psis += b.psi_sum;
            cnt += b.count;
        }
        const double m = static_cast<double>(cnt);
        const double cov = prod / m - (phis / m) * (psis / m);
        // batch-means spread
        double bm = 0.0, bs = 0.0;
        int used = 0;
        std::vector<double> bcov;
        bcov.reserve(batches.size());
        for (auto& b : batches) {
            if (b.count == 0) continue;
            const double c = static_cast<double>(b.count);
            bcov.push_back(b.prod[k] / c - (b.phi_mean[k] / c) * (b.psi_sum / c));
            ++used;
        }
        for (double v : bcov) bm += v;
        bm /= used;
        for (double v : bcov) bs += (v - bm) * (v - bm);
        const double se = used > 1 ? std::sqrt(bs / (used - 1) / used) : 0.0;
        out[k] = {lags[k], cov, se};
    }
    return out;
}

// ---------------------------------------------------------------------------
// Decay-rate fitting
// ---------------------------------------------------------------------------

struct DecayModel {
    enum class Kind { polynomial, beta_exponential };
    Kind kind = Kind::polynomial;
    double beta = 1.0;

    static DecayModel polynomial() { return {Kind::polynomial, 1.0}; }
    static DecayModel beta_exponential(double beta) { return {Kind::beta_exponential, beta}; }
};

struct DecayFit {
    double alpha_hat = 0.0;
    double log_c = 0.0;  // fitted log prefactor
    std::vector<long long> used_lags;
};

// Least-squares fit of log |c(n)| against log n (polynomial model) or n^beta
// (stretched-exponential model), over lags whose estimate clears the noise
// floor |c| > 3 se.  Needs at least four usable lags.
inline DecayFit fit_decay_rate(const std::vector<CorrelationEstimate>& corr, DecayModel model) {
    std::vector<double> xs, ys;
    DecayFit fit;
    for (const auto& e : corr) {
        if (e.lag < 1) continue;
        const double mag = std::abs(e.value);
        if (!(mag > 0.0) || mag <= 3.0 * e.std_error) continue;
        fit.used_lags.push_back(e.lag);
        xs.push_back(model.kind == DecayModel::Kind::polynomial
                         ? std::log(static_cast<double>(e.lag))
                         : std::pow(static_cast<double>(e.lag), model.beta));
        ys.push_back(std::log(mag));
    }
    if (xs.size() < 4) {
        std::string msg = "fit_decay_rate: fewer than 4 lags above the noise floor; usable:";
        for (auto l : fit.used_lags) msg += " " + std::to_string(l);
        throw insufficient_signal_error(msg, fit.used_lags);
    }
    const std::size_t n = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double det = n * sxx - sx * sx;
    if (det == 0.0) throw degenerate_fit_error("fit_decay_rate: degenerate lag grid");
    const double slope = (n * sxy - sx * sy) / det;
    fit.alpha_hat = -slope;
    fit.log_c = (sy - slope * sx) / n;
    return fit;
}

}  // namespace bclab::dynsys
