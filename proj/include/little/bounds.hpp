#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "little/errors.hpp"
#include "little/scalar_opt.hpp"
#include "little/special_functions.hpp"

namespace little {

// Ground-state energy bounds for the scaled quantities xi_p/sqrt(n) and
// xi_n/sqrt(n) at aspect ratio alpha = m/n.  All five are valid for the
// expectation at every finite size, not just in the limit, which is what
// makes them testable against Monte Carlo at desk scale.

inline constexpr double sqrt_2_over_pi = 0.7978845608028654;

namespace detail {
inline void require_alpha(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw data_error("alpha must be a positive finite real, got " + std::to_string(alpha));
}
} // namespace detail

/// Replica-symmetric upper bound (sqrt(alpha)+1) sqrt(2/pi).
inline double rs_upper(double alpha) {
    detail::require_alpha(alpha);
    return (std::sqrt(alpha) + 1.0) * sqrt_2_over_pi;
}

/// Lower bound (sqrt(alpha)+1) xi_sk obtained by comparison with two
/// independent square quadratic-form problems; xi_sk is an input constant
/// (default 0.763 elsewhere), not computed here.
inline double sk_scaled_lower(double alpha, double xi_sk) {
    detail::require_alpha(alpha);
    if (!std::isfinite(xi_sk)) throw data_error("xi_sk must be finite");
    return (std::sqrt(alpha) + 1.0) * xi_sk;
}

/// Simple minmax lower bound (sqrt(alpha)-1) sqrt(2/pi); negative and thus
/// uninformative for alpha < 1.
inline double minmax_simple_lower(double alpha) {
    detail::require_alpha(alpha);
    return (std::sqrt(alpha) - 1.0) * sqrt_2_over_pi;
}

/// Value and optimal rate constant of an optimized one-parameter bound.
struct OptimizedBound {
    double value = 0.0;
    double c3_star = 0.0;
    int iterations = 0;
};

inline constexpr double bound_scan_lo = 1e-6;
inline constexpr double bound_scan_hi = 50.0;

/// Improved upper bound: minimize over c > 0
///   f(c) = c/2 + (1/c) ln_erfc(-c/sqrt(2)) + (alpha/c) ln_erfc(-c/sqrt(2 alpha)).
/// As c -> 0+ this recovers rs_upper(alpha), so the minimum can only improve
/// on it.
inline OptimizedBound lowered_upper(double alpha) {
    detail::require_alpha(alpha);
    ScalarOptProblem p;
    p.objective = [alpha](double c) {
        return 0.5 * c + ln_erfc(-c / std::numbers::sqrt2) / c +
               alpha / c * ln_erfc(-c / std::sqrt(2.0 * alpha));
    };
    p.sense = OptSense::minimize;
    p.lo = bound_scan_lo;
    p.hi = bound_scan_hi;
    p.x_tol = 1e-10;
    const ScalarOptResult r = optimize_scalar(p);
    return {r.value, r.x, r.iterations};
}

/// Improved minmax lower bound: maximize over c > 0
///   g(c) = -c/2 - (1/c) ln_erfc(-c/sqrt(2)) - (alpha/c) ln_erfc(c/sqrt(2 alpha)).
/// As c -> 0+ this recovers minmax_simple_lower(alpha).  The third term is
/// ln_erfc at a positive argument, which is why ln_erfc must stay finite far
/// past the naive underflow point.
inline OptimizedBound minmax_lifted_lower(double alpha) {
    detail::require_alpha(alpha);
    ScalarOptProblem p;
    p.objective = [alpha](double c) {
        return -0.5 * c - ln_erfc(-c / std::numbers::sqrt2) / c -
               alpha / c * ln_erfc(c / std::sqrt(2.0 * alpha));
    };
    p.sense = OptSense::maximize;
    p.lo = bound_scan_lo;
    p.hi = bound_scan_hi;
    p.x_tol = 1e-10;
    const ScalarOptResult r = optimize_scalar(p);
    return {r.value, r.x, r.iterations};
}

/// All five bounds at one aspect ratio.
struct BoundReport {
    double alpha = 0.0;
    double xi_sk = 0.0;
    double sk_lower = 0.0;
    double rs_upper = 0.0;
    double lowered_upper = 0.0;
    double c3_star_upper = 0.0;
    double minmax_simple_lower = 0.0;
    double minmax_lifted_lower = 0.0;
    double c3_star_minmax = 0.0;
    int optimizer_iters_upper = 0;
    int optimizer_iters_minmax = 0;
};

inline constexpr double default_xi_sk = 0.763;

/// Evaluate all bounds and enforce their mutual ordering before returning.
/// A violated ordering means a formula or the optimizer regressed, so it is
/// an error, not a warning.
inline BoundReport bound_report(double alpha, double xi_sk = default_xi_sk) {
    detail::require_alpha(alpha);
    BoundReport r;
    r.alpha = alpha;
    r.xi_sk = xi_sk;
    r.sk_lower = sk_scaled_lower(alpha, xi_sk);
    r.rs_upper = rs_upper(alpha);
    const OptimizedBound up = lowered_upper(alpha);
    r.lowered_upper = up.value;
    r.c3_star_upper = up.c3_star;
    r.optimizer_iters_upper = up.iterations;
    r.minmax_simple_lower = minmax_simple_lower(alpha);
    const OptimizedBound lift = minmax_lifted_lower(alpha);
    r.minmax_lifted_lower = lift.value;
    r.c3_star_minmax = lift.c3_star;
    r.optimizer_iters_minmax = lift.iterations;

    if (!(r.sk_lower <= r.lowered_upper + 1e-12) && xi_sk <= default_xi_sk)
        throw data_error("bound ordering violated: sk_lower > lowered_upper at alpha=" +
                         std::to_string(alpha));
    if (!(r.lowered_upper <= r.rs_upper + 1e-12))
        throw data_error("bound ordering violated: lowered_upper > rs_upper at alpha=" +
                         std::to_string(alpha));
    if (!(r.minmax_lifted_lower >= r.minmax_simple_lower - 1e-12))
        throw data_error("bound ordering violated: minmax_lifted_lower < minmax_simple_lower at alpha=" +
                         std::to_string(alpha));
    if (!(r.c3_star_upper > 0.0) || !std::isfinite(r.c3_star_upper) ||
        !(r.c3_star_minmax > 0.0) || !std::isfinite(r.c3_star_minmax))
        throw data_error("optimizer returned a non-positive or non-finite rate constant");
    return r;
}

} // namespace little
