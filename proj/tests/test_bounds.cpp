#include <cmath>

#include "doctest.h"
#include "little/bounds.hpp"

using namespace little;

namespace {

// The two optimized objectives, restated locally so the bound functions are
// checked against an independent spelling of the formulas.
double f_upper(double c, double alpha) {
    return 0.5 * c + ln_erfc(-c / std::numbers::sqrt2) / c +
           alpha / c * ln_erfc(-c / std::sqrt(2.0 * alpha));
}

double g_lift(double c, double alpha) {
    return -0.5 * c - ln_erfc(-c / std::numbers::sqrt2) / c -
           alpha / c * ln_erfc(c / std::sqrt(2.0 * alpha));
}

} // namespace

TEST_CASE("closed-form bounds hit their reference values") {
    CHECK(rs_upper(1.0) == doctest::Approx(1.5957691216057308).epsilon(1e-12));
    CHECK(rs_upper(1.0) == doctest::Approx(2.0 * std::sqrt(2.0 / std::numbers::pi)).epsilon(1e-15));
    CHECK(rs_upper(4.0) == doctest::Approx(3.0 * std::sqrt(2.0 / std::numbers::pi)).epsilon(1e-15));
    CHECK(rs_upper(1e-12) == doctest::Approx(std::sqrt(2.0 / std::numbers::pi)).epsilon(1e-6));

    CHECK(sk_scaled_lower(1.0, 0.763) == 1.526);
    CHECK(sk_scaled_lower(1.0, 0.7632) == 1.5264);
    CHECK(sk_scaled_lower(2.0, 0.0) == 0.0);

    CHECK(minmax_simple_lower(1.0) == 0.0);
    CHECK(minmax_simple_lower(4.0) == std::sqrt(2.0 / std::numbers::pi));
    CHECK(minmax_simple_lower(0.25) ==
          doctest::Approx(-0.5 * std::sqrt(2.0 / std::numbers::pi)).epsilon(1e-15));
}

TEST_CASE("optimized upper bound at alpha=1") {
    const auto r = lowered_upper(1.0);
    CHECK(std::abs(r.value - 1.5376) <= 5e-4);
    CHECK(r.value == doctest::Approx(1.5376560511).epsilon(1e-9));
    CHECK(r.value < rs_upper(1.0));
    CHECK(r.c3_star == doctest::Approx(0.81726428).epsilon(1e-4));
    CHECK(r.iterations > 0);
    CHECK(f_upper(r.c3_star, 1.0) == doctest::Approx(r.value).epsilon(1e-12));
    CHECK(f_upper(r.c3_star * 1.001, 1.0) >= r.value - 1e-9);
    CHECK(f_upper(r.c3_star * 0.999, 1.0) >= r.value - 1e-9);
}

TEST_CASE("optimized minmax lower bound at alpha=1") {
    const auto r = minmax_lifted_lower(1.0);
    CHECK(std::abs(r.value - 0.24439) <= 5e-5);
    CHECK(r.value == doctest::Approx(0.2443874212).epsilon(1e-8));
    CHECK(r.value > minmax_simple_lower(1.0));
    CHECK(r.c3_star == doctest::Approx(3.6155532).epsilon(1e-4));
    CHECK(g_lift(r.c3_star, 1.0) == doctest::Approx(r.value).epsilon(1e-12));
    CHECK(g_lift(r.c3_star * 1.001, 1.0) <= r.value + 1e-9);
    CHECK(g_lift(r.c3_star * 0.999, 1.0) <= r.value + 1e-9);
}

TEST_CASE("the c->0 limits of both objectives recover the simple bounds") {
    for (double alpha : {0.5, 1.0, 2.0}) {
        CHECK(std::abs(f_upper(1e-4, alpha) - rs_upper(alpha)) <= 1e-3);
        CHECK(std::abs(g_lift(1e-4, alpha) - minmax_simple_lower(alpha)) <= 1e-3);
    }
}

TEST_CASE("optimization is insensitive to grid refinement") {
    for (double alpha : {0.25, 1.0, 4.0}) {
        ScalarOptProblem p;
        p.objective = [alpha](double c) { return f_upper(c, alpha); };
        p.sense = OptSense::minimize;
        p.lo = bound_scan_lo;
        p.hi = bound_scan_hi;
        p.x_tol = 1e-10;
        p.grid_points = 200;
        const double coarse = optimize_scalar(p).value;
        p.grid_points = 400;
        const double fine = optimize_scalar(p).value;
        CHECK(std::abs(coarse - fine) < 1e-9);
    }
}

TEST_CASE("scalar optimizer refines a known minimum") {
    ScalarOptProblem p;
    p.objective = [](double x) { return (x - 2.0) * (x - 2.0); };
    p.sense = OptSense::minimize;
    p.lo = 0.1;
    p.hi = 10.0;
    p.x_tol = 1e-10;
    const auto r = optimize_scalar(p);
    CHECK(r.x == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(r.value <= 1e-15);
    CHECK(r.bracket_lo < 2.0);
    CHECK(r.bracket_hi > 2.0);
}

TEST_CASE("monotone objectives fail loudly instead of clipping") {
    ScalarOptProblem p;
    p.objective = [](double x) { return x; };
    p.sense = OptSense::minimize;
    p.lo = 1e-6;
    p.hi = 50.0;
    CHECK_THROWS_AS(optimize_scalar(p), optimizer_error);
    p.sense = OptSense::maximize;
    CHECK_THROWS_AS(optimize_scalar(p), optimizer_error);
    // a real trigger: the lifted bound's optimum leaves the scan range for
    // very thin aspect ratios
    CHECK_THROWS_AS(minmax_lifted_lower(0.01), optimizer_error);
}

TEST_CASE("scalar optimizer validates its problem") {
    ScalarOptProblem p;
    p.objective = [](double x) { return x * x; };
    p.lo = -1.0;
    p.hi = 2.0;
    CHECK_THROWS_AS(optimize_scalar(p), data_error);
    p.lo = 3.0;
    CHECK_THROWS_AS(optimize_scalar(p), data_error);
    p.lo = 0.5;
    p.hi = 2.0;
    p.grid_points = 2;
    CHECK_THROWS_AS(optimize_scalar(p), data_error);
}

TEST_CASE("bound_report aggregates consistently at alpha=1") {
    const auto r = bound_report(1.0, 0.763);
    CHECK(r.alpha == 1.0);
    CHECK(r.xi_sk == 0.763);
    CHECK(r.sk_lower == 1.526);
    CHECK(r.rs_upper == doctest::Approx(1.5957691216057308).epsilon(1e-12));
    CHECK(std::abs(r.lowered_upper - 1.5376) <= 5e-4);
    CHECK(r.minmax_simple_lower == 0.0);
    CHECK(std::abs(r.minmax_lifted_lower - 0.24439) <= 5e-5);
    CHECK(r.sk_lower < r.lowered_upper);
    CHECK(r.lowered_upper < r.rs_upper);
    CHECK(r.optimizer_iters_upper > 0);
    CHECK(r.optimizer_iters_minmax > 0);
}

TEST_CASE("bound ordering holds across the aspect-ratio grid") {
    for (double alpha : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        const auto r = bound_report(alpha);
        CHECK(r.sk_lower <= r.lowered_upper + 1e-9);
        CHECK(r.lowered_upper <= r.rs_upper + 1e-9);
        CHECK(r.minmax_lifted_lower >= r.minmax_simple_lower - 1e-9);
        CHECK(r.c3_star_upper > 0.0);
        CHECK(r.c3_star_minmax > 0.0);
        CHECK(std::isfinite(r.c3_star_upper));
        CHECK(std::isfinite(r.c3_star_minmax));
    }
}

TEST_CASE("xi_sk feeds only the quadratic-form lower bound") {
    const auto a = bound_report(0.5, 0.7);
    const auto b = bound_report(0.5, 0.8);
    CHECK(a.sk_lower == doctest::Approx((std::sqrt(0.5) + 1.0) * 0.7).epsilon(1e-15));
    CHECK(b.sk_lower == doctest::Approx((std::sqrt(0.5) + 1.0) * 0.8).epsilon(1e-15));
    CHECK(a.rs_upper == b.rs_upper);
    CHECK(a.lowered_upper == b.lowered_upper);
    CHECK(a.c3_star_upper == b.c3_star_upper);
    CHECK(a.minmax_simple_lower == b.minmax_simple_lower);
    CHECK(a.minmax_lifted_lower == b.minmax_lifted_lower);
    CHECK(a.c3_star_minmax == b.c3_star_minmax);
}

TEST_CASE("bad aspect ratios are rejected") {
    CHECK_THROWS_AS(rs_upper(0.0), data_error);
    CHECK_THROWS_AS(rs_upper(-1.0), data_error);
    CHECK_THROWS_AS(bound_report(std::nan("")), data_error);
    CHECK_THROWS_AS(sk_scaled_lower(1.0, std::nan("")), data_error);
}
