#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "little/errors.hpp"

namespace little {

enum class OptSense { minimize, maximize };

/// One-dimensional optimization problem on a positive interval.
struct ScalarOptProblem {
    std::function<double(double)> objective;
    OptSense sense = OptSense::minimize;
    double lo = 1e-6;
    double hi = 50.0;
    double x_tol = 1e-10;
    int grid_points = 200;
};

struct ScalarOptResult {
    double x = 0.0;
    double value = 0.0;
    int iterations = 0;  // objective evaluations: grid scan plus refinement
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
};

/// Bracket the optimum on a log-spaced grid, then refine by golden-section
/// search.  The optimum of every objective this library feeds in here is
/// interior on [lo, hi]; if the best grid point lands on an endpoint there
/// is no bracket and the search fails loudly rather than returning a
/// silently clipped value.
inline ScalarOptResult optimize_scalar(const ScalarOptProblem& problem) {
    if (!(problem.lo > 0.0) || !(problem.hi > problem.lo))
        throw data_error("scalar optimizer needs 0 < lo < hi, got lo=" +
                         std::to_string(problem.lo) + " hi=" + std::to_string(problem.hi));
    if (problem.grid_points < 3)
        throw data_error("scalar optimizer needs at least 3 grid points");
    if (!problem.objective) throw data_error("scalar optimizer needs an objective");

    const double flip = problem.sense == OptSense::maximize ? -1.0 : 1.0;
    auto f = [&](double x) { return flip * problem.objective(x); };
    int evals = 0;

    const int g = problem.grid_points;
    const double log_lo = std::log(problem.lo), log_hi = std::log(problem.hi);
    std::vector<double> xs(g), fs(g);
    int best = 0;
    for (int i = 0; i < g; ++i) {
        xs[i] = std::exp(log_lo + (log_hi - log_lo) * i / (g - 1));
        fs[i] = f(xs[i]);
        ++evals;
        if (!std::isfinite(fs[i]))
            throw optimizer_error("objective is not finite at x=" + std::to_string(xs[i]));
        if (fs[i] < fs[best]) best = i;
    }
    if (best == 0 || best == g - 1)
        throw optimizer_error(
            "no interior bracket on [" + std::to_string(problem.lo) + ", " +
            std::to_string(problem.hi) + "]: best grid point is the " +
            (best == 0 ? "left" : "right") + " endpoint x=" + std::to_string(xs[best]) +
            " with objective " + std::to_string(problem.objective(xs[best])));

    double a = xs[best - 1], b = xs[best + 1];
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    evals += 2;
    while (b - a > problem.x_tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        ++evals;
    }

    ScalarOptResult res;
    res.x = 0.5 * (a + b);
    res.value = problem.objective(res.x);
    ++evals;
    res.iterations = evals;
    res.bracket_lo = xs[best - 1];
    res.bracket_hi = xs[best + 1];
    return res;
}

} // namespace little
