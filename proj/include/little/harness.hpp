#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "little/bounds.hpp"
#include "little/errors.hpp"
#include "little/instance.hpp"
#include "little/rng.hpp"
#include "little/solvers.hpp"
#include "little/stats.hpp"

namespace little {

enum class Problem { max_little, minmax_little, sk };

inline std::string to_string(Problem p) {
    switch (p) {
        case Problem::max_little: return "max";
        case Problem::minmax_little: return "minmax";
        default: return "sk";
    }
}

inline Problem problem_from_string(const std::string& s) {
    if (s == "max") return Problem::max_little;
    if (s == "minmax") return Problem::minmax_little;
    if (s == "sk") return Problem::sk;
    throw data_error("unknown problem '" + s + "' (expected max, minmax or sk)");
}

/// Recipe for one Monte Carlo experiment.  Trial t draws its instance from
/// the seed derived from (master_seed, t), so the set of instances is fixed
/// by the config alone: raising `trials` extends the sample, and `workers`
/// only changes who computes which trial, never the numbers.
struct ExperimentConfig {
    Problem problem = Problem::max_little;
    std::size_t m = 0;  // ignored for Problem::sk
    std::size_t n = 0;
    Dist dist = Dist::gaussian;
    std::uint64_t trials = 1;
    std::uint64_t master_seed = 0;
    int workers = 1;
    SolverLimits limits;
};

namespace detail {

inline void validate_config(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw data_error("trials must be >= 1");
    if (cfg.workers < 1) throw data_error("workers must be >= 1");
    if (cfg.n < 1) throw size_error("n must be >= 1");
    if (cfg.problem != Problem::sk && cfg.m < 1) throw size_error("m must be >= 1");
    if (cfg.n > static_cast<std::size_t>(cfg.limits.max_n_enumeration))
        throw size_error("n=" + std::to_string(cfg.n) + " exceeds enumeration cap " +
                         std::to_string(cfg.limits.max_n_enumeration));
}

/// Run per_trial(t) for t in [0, trials) on up to `workers` threads.
/// per_trial must write only to its own slot of any shared output.  The
/// first failure (lowest trial index among those observed) aborts the run.
template <class Fn>
void parallel_trials(std::uint64_t trials, int workers, Fn&& per_trial) {
    const int w = static_cast<int>(std::min<std::uint64_t>(
        trials, static_cast<std::uint64_t>(workers < 1 ? 1 : workers)));
    std::optional<std::pair<std::uint64_t, std::string>> first_error;
    if (w == 1) {
        for (std::uint64_t t = 0; t < trials; ++t) {
            try {
                per_trial(t);
            } catch (const std::exception& e) {
                first_error = {t, e.what()};
                break;
            }
        }
    } else {
        std::atomic<std::uint64_t> next{0};
        std::atomic<bool> stop{false};
        std::mutex err_mutex;
        auto work = [&] {
            while (!stop.load(std::memory_order_relaxed)) {
                const std::uint64_t t = next.fetch_add(1, std::memory_order_relaxed);
                if (t >= trials) break;
                try {
                    per_trial(t);
                } catch (const std::exception& e) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error || t < first_error->first) first_error = {t, e.what()};
                    stop.store(true, std::memory_order_relaxed);
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(w);
        for (int i = 0; i < w; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (first_error)
        throw solver_error("trial " + std::to_string(first_error->first) + ": " +
                           first_error->second);
}

inline double solve_one_trial(const ExperimentConfig& cfg, std::uint64_t t) {
    const std::uint64_t seed = rng::derive_seed(
        cfg.master_seed, static_cast<std::uint64_t>(rng::purpose::instance), t);
    switch (cfg.problem) {
        case Problem::max_little:
            return solve_max(generate_instance(cfg.m, cfg.n, cfg.dist, seed), cfg.limits).scaled;
        case Problem::minmax_little:
            return solve_minmax(generate_instance(cfg.m, cfg.n, cfg.dist, seed), cfg.limits).scaled;
        default:
            return solve_sk(symmetrize(generate_instance(cfg.n, cfg.n, cfg.dist, seed)),
                            cfg.limits).scaled;
    }
}

} // namespace detail

/// Monte Carlo disorder average: solve `trials` independent instances and
/// aggregate their scaled ground-state energies.
inline TrialStats run_trials(const ExperimentConfig& cfg) {
    detail::validate_config(cfg);
    std::vector<double> values(cfg.trials);
    detail::parallel_trials(cfg.trials, cfg.workers,
                            [&](std::uint64_t t) { values[t] = detail::solve_one_trial(cfg, t); });
    return compute_stats(std::move(values));
}

enum class SweepAxis { n, alpha };

inline std::string to_string(SweepAxis a) { return a == SweepAxis::n ? "n" : "alpha"; }

inline SweepAxis axis_from_string(const std::string& s) {
    if (s == "n") return SweepAxis::n;
    if (s == "alpha") return SweepAxis::alpha;
    throw data_error("unknown sweep axis '" + s + "' (expected n or alpha)");
}

struct SweepPoint {
    double axis_value = 0.0;
    std::size_t m = 0;
    std::size_t n = 0;
    TrialStats stats;
    BoundReport bounds;
};

struct SweepResult {
    SweepAxis axis = SweepAxis::n;
    Problem problem = Problem::max_little;
    Dist dist = Dist::gaussian;
    std::uint64_t trials = 0;
    std::uint64_t master_seed = 0;
    std::vector<SweepPoint> points;
};

/// Run one experiment per axis value, holding everything else fixed.
///
/// All points share the base master seed, so a whole sweep is reproducible
/// from a single seed.  Along the n axis the aspect ratio of the base config
/// is preserved (m scales with n, rounded to the nearest integer); along the
/// alpha axis n is held fixed and m = round(alpha * n), and the recorded
/// axis value is the realized ratio m/n.  Values are sorted ascending and
/// must be distinct after realization.
inline SweepResult sweep(const ExperimentConfig& base, SweepAxis axis,
                         std::vector<double> values, double xi_sk = default_xi_sk) {
    if (values.empty()) throw data_error("sweep needs at least one axis value");
    if (axis == SweepAxis::alpha && base.problem == Problem::sk)
        throw data_error("alpha sweep is undefined for the sk problem (instances are square)");
    std::sort(values.begin(), values.end());

    SweepResult result;
    result.axis = axis;
    result.problem = base.problem;
    result.dist = base.dist;
    result.trials = base.trials;
    result.master_seed = base.master_seed;

    for (double v : values) {
        if (!std::isfinite(v) || v <= 0.0)
            throw data_error("axis values must be positive, got " + std::to_string(v));
        ExperimentConfig cfg = base;
        SweepPoint point;
        if (axis == SweepAxis::n) {
            if (v != std::floor(v))
                throw data_error("n axis values must be integers, got " + std::to_string(v));
            cfg.n = static_cast<std::size_t>(v);
            if (base.problem == Problem::sk) {
                cfg.m = cfg.n;
            } else {
                if (base.n < 1) throw size_error("base n must be >= 1");
                const double aspect =
                    static_cast<double>(base.m) / static_cast<double>(base.n);
                cfg.m = static_cast<std::size_t>(
                    std::max<long long>(1, std::llround(aspect * v)));
            }
            point.axis_value = v;
        } else {
            cfg.n = base.n;
            cfg.m = static_cast<std::size_t>(
                std::max<long long>(1, std::llround(v * static_cast<double>(base.n))));
            point.axis_value = static_cast<double>(cfg.m) / static_cast<double>(cfg.n);
        }
        point.m = cfg.m;
        point.n = cfg.n;
        point.stats = run_trials(cfg);
        const double bound_alpha =
            base.problem == Problem::sk
                ? 1.0
                : static_cast<double>(cfg.m) / static_cast<double>(cfg.n);
        point.bounds = bound_report(bound_alpha, xi_sk);
        result.points.push_back(std::move(point));
    }

    for (std::size_t i = 1; i < result.points.size(); ++i)
        if (!(result.points[i].axis_value > result.points[i - 1].axis_value))
            throw data_error("axis values must be strictly increasing after realization; value " +
                             std::to_string(result.points[i].axis_value) + " repeats");
    return result;
}

/// Same experiment under Gaussian and Bernoulli disorder, with a CI-based
/// compatibility verdict.  At finite n the two means genuinely differ a
/// little, so an incompatible verdict is reported, not treated as an error.
struct UniversalityReport {
    std::size_t m = 0;
    std::size_t n = 0;
    std::uint64_t trials = 0;
    std::uint64_t master_seed = 0;
    TrialStats gauss;
    TrialStats bern;
    double difference = 0.0;
    double threshold = 0.0;
    bool compatible = false;
    bool underpowered = false;
};

inline UniversalityReport universality_compare(std::size_t m, std::size_t n,
                                               std::uint64_t trials, std::uint64_t master_seed,
                                               int workers = 1, const SolverLimits& limits = {}) {
    ExperimentConfig cfg;
    cfg.problem = Problem::max_little;
    cfg.m = m;
    cfg.n = n;
    cfg.trials = trials;
    cfg.master_seed = master_seed;
    cfg.workers = workers;
    cfg.limits = limits;

    UniversalityReport rep;
    rep.m = m;
    rep.n = n;
    rep.trials = trials;
    rep.master_seed = master_seed;
    cfg.dist = Dist::gaussian;
    rep.gauss = run_trials(cfg);
    cfg.dist = Dist::bernoulli;
    rep.bern = run_trials(cfg);
    rep.difference = std::abs(rep.gauss.mean - rep.bern.mean);
    const double tg = 3.0 * rep.gauss.ci95, tb = 3.0 * rep.bern.ci95;
    rep.threshold = std::sqrt(tg * tg + tb * tb);
    rep.compatible = rep.difference <= rep.threshold;
    rep.underpowered = trials < 2;
    return rep;
}

/// Paired comparison between the asymmetric square problem and the sum of
/// two independent quadratic-form problems of the same size.
///
/// Per trial, three independent n x n Gaussian matrices are drawn.  The left
/// side is the scaled bilinear maximum of the first.  Each right-side term
/// is the full quadratic-form maximum max_x x^T H x / n of one auxiliary
/// matrix, obtained exactly as trace(H)/n + sqrt(2) * (symmetrized maximum),
/// then scaled by 1/sqrt(2 n).  The expectation inequality
///   E[left] >= E[right term 1] + E[right term 2]
/// holds at every finite n; the report checks the empirical direction
/// within three combined standard errors.
struct SkComparisonReport {
    std::size_t n = 0;
    std::uint64_t trials = 0;
    std::uint64_t master_seed = 0;
    double xi_sk = default_xi_sk;
    TrialStats left;
    TrialStats right;
    double combined_ci3 = 0.0;
    bool direction_holds = false;
    /// Limiting value of the right side, (sqrt(alpha)+1) * xi_sk at alpha=1,
    /// echoed for context.
    double asymptotic_lower = 0.0;
};

inline SkComparisonReport sk_comparison_report(std::size_t n, std::uint64_t trials,
                                               std::uint64_t master_seed,
                                               double xi_sk = default_xi_sk, int workers = 1,
                                               const SolverLimits& limits = {}) {
    if (trials < 1) throw data_error("trials must be >= 1");
    if (n < 1) throw size_error("n must be >= 1");
    if (n > static_cast<std::size_t>(limits.max_n_enumeration))
        throw size_error("n=" + std::to_string(n) + " exceeds enumeration cap " +
                         std::to_string(limits.max_n_enumeration));

    std::vector<double> left(trials), right(trials);
    auto quad_term = [&](std::uint64_t seed) {
        const LittleInstance h = generate_instance(n, n, Dist::gaussian, seed);
        double trace = 0.0;
        for (std::size_t i = 0; i < n; ++i) trace += h.h(i, i);
        const double quad_max = trace / static_cast<double>(n) +
                                std::numbers::sqrt2 * solve_sk(symmetrize(h), limits).value;
        return quad_max / (std::numbers::sqrt2 * std::sqrt(static_cast<double>(n)));
    };
    detail::parallel_trials(trials, workers, [&](std::uint64_t t) {
        using rng::purpose;
        const std::uint64_t sl = rng::derive_seed(
            master_seed, static_cast<std::uint64_t>(purpose::compare_full), t);
        const std::uint64_t s1 = rng::derive_seed(
            master_seed, static_cast<std::uint64_t>(purpose::compare_one), t);
        const std::uint64_t s2 = rng::derive_seed(
            master_seed, static_cast<std::uint64_t>(purpose::compare_two), t);
        left[t] = solve_max(generate_instance(n, n, Dist::gaussian, sl), limits).scaled;
        right[t] = quad_term(s1) + quad_term(s2);
    });

    SkComparisonReport rep;
    rep.n = n;
    rep.trials = trials;
    rep.master_seed = master_seed;
    rep.xi_sk = xi_sk;
    rep.left = compute_stats(std::move(left));
    rep.right = compute_stats(std::move(right));
    rep.combined_ci3 =
        3.0 * std::sqrt(rep.left.ci95 * rep.left.ci95 + rep.right.ci95 * rep.right.ci95);
    rep.direction_holds = rep.left.mean >= rep.right.mean - rep.combined_ci3;
    rep.asymptotic_lower = sk_scaled_lower(1.0, xi_sk);
    return rep;
}

} // namespace little
