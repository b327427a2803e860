#include <cmath>

#include "doctest.h"
#include "little/harness.hpp"

using namespace little;

namespace {

ExperimentConfig base_config(Problem p, std::size_t m, std::size_t n, std::uint64_t trials,
                             std::uint64_t seed) {
    ExperimentConfig cfg;
    cfg.problem = p;
    cfg.m = m;
    cfg.n = n;
    cfg.trials = trials;
    cfg.master_seed = seed;
    return cfg;
}

} // namespace

TEST_CASE("compensated summation fixes the classic cancellation example") {
    std::vector<double> values{1.0, 1e100, 1.0, -1e100};
    CHECK(compensated_sum(values) == 2.0);
}

TEST_CASE("a single trial is its own mean with zero spread") {
    const auto cfg = base_config(Problem::max_little, 4, 4, 1, 21);
    const auto stats = run_trials(cfg);
    CHECK(stats.trials == 1);
    CHECK(stats.std == 0.0);
    CHECK(stats.ci95 == 0.0);
    const auto inst = generate_instance(
        4, 4, Dist::gaussian,
        rng::derive_seed(21, static_cast<std::uint64_t>(rng::purpose::instance), 0));
    CHECK(stats.mean == solve_max(inst).scaled);
}

TEST_CASE("results are identical for any worker count") {
    auto cfg = base_config(Problem::max_little, 8, 8, 12, 5);
    const auto one = run_trials(cfg);
    cfg.workers = 4;
    const auto four = run_trials(cfg);
    cfg.workers = 3;
    const auto three = run_trials(cfg);
    CHECK(one.mean == four.mean);
    CHECK(one.std == four.std);
    CHECK(one.per_trial == four.per_trial);
    CHECK(one.mean == three.mean);
    CHECK(one.per_trial == three.per_trial);
}

TEST_CASE("adding trials extends the sample without disturbing earlier trials") {
    auto cfg = base_config(Problem::minmax_little, 6, 5, 6, 77);
    const auto shorter = run_trials(cfg);
    cfg.trials = 12;
    const auto longer = run_trials(cfg);
    for (std::size_t t = 0; t < 6; ++t) CHECK(shorter.per_trial[t] == longer.per_trial[t]);
}

TEST_CASE("per-trial values reproduce the reported statistics exactly") {
    const auto stats = run_trials(base_config(Problem::max_little, 5, 6, 40, 3));
    const auto again = compute_stats(stats.per_trial);
    CHECK(again.mean == stats.mean);
    CHECK(again.std == stats.std);
    CHECK(again.ci95 == stats.ci95);
}

TEST_CASE("empirical means respect the non-asymptotic bounds") {
    for (Dist dist : {Dist::gaussian, Dist::bernoulli}) {
        auto cfg = base_config(Problem::max_little, 10, 10, 100, 11);
        cfg.dist = dist;
        const auto stats = run_trials(cfg);
        CHECK(stats.std > 0.0);
        CHECK(stats.mean <= rs_upper(1.0) + 3.0 * stats.ci95);
    }
    auto cfg = base_config(Problem::minmax_little, 20, 10, 100, 11);
    const auto stats = run_trials(cfg);
    CHECK(stats.mean >= minmax_simple_lower(2.0) - 3.0 * stats.ci95);
}

TEST_CASE("quadratic-form scaled energies land in the expected band at n=20") {
    const auto stats = run_trials(base_config(Problem::sk, 0, 20, 200, 42));
    CHECK(stats.mean >= 0.65);
    CHECK(stats.mean <= 0.80);
}

TEST_CASE("config validation happens before any trial runs") {
    auto cfg = base_config(Problem::max_little, 4, 4, 0, 1);
    CHECK_THROWS_AS(run_trials(cfg), data_error);
    cfg = base_config(Problem::max_little, 4, 31, 5, 1);
    CHECK_THROWS_AS(run_trials(cfg), size_error);
    cfg = base_config(Problem::max_little, 0, 4, 5, 1);
    CHECK_THROWS_AS(run_trials(cfg), size_error);
    cfg = base_config(Problem::max_little, 4, 4, 5, 1);
    cfg.workers = 0;
    CHECK_THROWS_AS(run_trials(cfg), data_error);
}

TEST_CASE("sweep along n preserves the aspect ratio and orders points") {
    const auto cfg = base_config(Problem::max_little, 12, 6, 20, 9);
    const auto result = sweep(cfg, SweepAxis::n, {10.0, 8.0, 6.0});
    REQUIRE(result.points.size() == 3);
    CHECK(result.points[0].axis_value == 6.0);
    CHECK(result.points[1].axis_value == 8.0);
    CHECK(result.points[2].axis_value == 10.0);
    CHECK(result.points[0].m == 12);
    CHECK(result.points[1].m == 16);
    CHECK(result.points[2].m == 20);
    for (const auto& p : result.points) {
        CHECK(p.stats.std > 0.0);
        CHECK(p.bounds.alpha == 2.0);
    }
}

TEST_CASE("sweep along alpha holds n fixed and records realized ratios") {
    const auto cfg = base_config(Problem::max_little, 8, 8, 10, 9);
    const auto result = sweep(cfg, SweepAxis::alpha, {2.0, 0.5, 1.0});
    REQUIRE(result.points.size() == 3);
    CHECK(result.points[0].axis_value == 0.5);
    CHECK(result.points[0].m == 4);
    CHECK(result.points[1].axis_value == 1.0);
    CHECK(result.points[2].axis_value == 2.0);
    CHECK(result.points[2].m == 16);
    for (const auto& p : result.points) {
        CHECK(p.bounds.sk_lower <= p.bounds.lowered_upper + 1e-9);
        CHECK(p.bounds.lowered_upper <= p.bounds.rs_upper + 1e-9);
        CHECK(p.bounds.minmax_lifted_lower >= p.bounds.minmax_simple_lower - 1e-9);
    }
}

TEST_CASE("sweep rejects degenerate inputs") {
    const auto cfg = base_config(Problem::max_little, 8, 8, 5, 9);
    CHECK_THROWS_AS(sweep(cfg, SweepAxis::n, {}), data_error);
    CHECK_THROWS_AS(sweep(cfg, SweepAxis::n, {6.0, 6.0}), data_error);
    CHECK_THROWS_AS(sweep(cfg, SweepAxis::n, {6.5}), data_error);
    CHECK_THROWS_AS(sweep(cfg, SweepAxis::n, {-4.0}), data_error);
    // ratios that collide after integer rounding of m
    CHECK_THROWS_AS(sweep(cfg, SweepAxis::alpha, {0.5, 0.55}), data_error);
    const auto sk_cfg = base_config(Problem::sk, 0, 8, 5, 9);
    CHECK_THROWS_AS(sweep(sk_cfg, SweepAxis::alpha, {0.5, 1.0}), data_error);
    CHECK_NOTHROW(sweep(sk_cfg, SweepAxis::n, {6.0, 8.0}));
}

TEST_CASE("universality comparison reports both distributions with a threshold") {
    const auto rep = universality_compare(8, 8, 200, 7);
    CHECK(rep.trials == 200);
    CHECK(rep.gauss.trials == 200);
    CHECK(rep.bern.trials == 200);
    CHECK(std::isfinite(rep.gauss.mean));
    CHECK(std::isfinite(rep.bern.mean));
    CHECK(rep.threshold > 0.0);
    CHECK(rep.difference == std::abs(rep.gauss.mean - rep.bern.mean));
    CHECK_FALSE(rep.underpowered);
    WARN_MESSAGE(rep.compatible, "distributions flagged incompatible at m=n=8; "
                                 "expected at most rarely at finite size");
    const double tg = 3.0 * rep.gauss.ci95, tb = 3.0 * rep.bern.ci95;
    CHECK(rep.threshold == std::sqrt(tg * tg + tb * tb));
}

TEST_CASE("a single-trial comparison is flagged underpowered") {
    const auto rep = universality_compare(4, 4, 1, 7);
    CHECK(rep.underpowered);
}

TEST_CASE("the square bilinear mean dominates the paired quadratic terms") {
    const auto rep = sk_comparison_report(8, 100, 9);
    CHECK(rep.direction_holds);
    CHECK(rep.left.trials == 100);
    CHECK(rep.right.trials == 100);
    CHECK(rep.left.mean > rep.right.mean);
    CHECK(rep.combined_ci3 ==
          3.0 * std::sqrt(rep.left.ci95 * rep.left.ci95 + rep.right.ci95 * rep.right.ci95));
    CHECK(rep.asymptotic_lower == 1.526);

    const auto tiny = sk_comparison_report(2, 500, 9);
    CHECK(tiny.direction_holds);
}

TEST_CASE("problem names round-trip") {
    CHECK(problem_from_string("max") == Problem::max_little);
    CHECK(problem_from_string("minmax") == Problem::minmax_little);
    CHECK(problem_from_string("sk") == Problem::sk);
    CHECK_THROWS_AS(problem_from_string("tsp"), data_error);
    CHECK(to_string(SweepAxis::alpha) == "alpha");
    CHECK_THROWS_AS(axis_from_string("beta"), data_error);
}
