#pragma once

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "little/errors.hpp"
#include "little/instance.hpp"

namespace little {

/// Hard ceilings and maintenance knobs for the exact solvers.
struct SolverLimits {
    /// Largest n the Gray-code solvers will enumerate (2^(n-1) states).
    int max_n_enumeration = 30;
    /// Steps between full refreshes of incrementally maintained vectors.
    std::uint64_t recompute_period = 1ull << 16;
};

inline constexpr int hard_max_n_enumeration = 30;
inline constexpr int max_joint_brute_force_bits = 24;
inline constexpr int max_minmax_brute_force_bits = 20;

/// Sign configuration attaining an optimum.  Entries are +/-1; the physical
/// vectors are x/sqrt(n) and y/sqrt(m).  y is absent for square quadratic
/// problems, where only one spin vector exists.
struct SpinAssignment {
    static constexpr std::string_view convention =
        "entries are +/-1; physical vectors are x/sqrt(n) and y/sqrt(m)";
    std::vector<int> x;
    std::optional<std::vector<int>> y;
};

/// Outcome of an exact ground-state computation.
///   value    optimum of the objective in its natural normalization
///   scaled   value / sqrt(n), the quantity with an n-independent limit
struct GroundStateResult {
    double value = 0.0;
    double scaled = 0.0;
    SpinAssignment assignment;
    std::uint64_t configs_visited = 0;
    double elapsed_seconds = 0.0;
    /// Largest deviation between an incrementally maintained vector and its
    /// fresh recomputation, over all refresh points.  A drift of order 1
    /// would indicate a broken update rule; healthy runs sit near 1e-13.
    double max_refresh_drift = 0.0;
};

namespace detail {

inline void require_finite(const Matrix& h) {
    for (double e : h.data)
        if (!std::isfinite(e)) throw data_error("matrix contains a non-finite entry");
}

inline void require_limits(const SolverLimits& limits) {
    if (limits.max_n_enumeration < 1 || limits.max_n_enumeration > hard_max_n_enumeration)
        throw size_error("max_n_enumeration must be in [1, " +
                         std::to_string(hard_max_n_enumeration) + "], got " +
                         std::to_string(limits.max_n_enumeration));
    if (limits.recompute_period == 0)
        throw size_error("recompute_period must be positive");
}

inline std::vector<int> to_signs(const std::vector<double>& x) {
    std::vector<int> s(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] > 0.0 ? 1 : -1;
    return s;
}

} // namespace detail

/// l1 objective ||h x||_1 / (sqrt(m) sqrt(n)) for a given sign vector x.
/// This equals the bilinear form at the analytically optimal y = sign(h x).
inline double little_objective(const LittleInstance& inst, const std::vector<int>& x) {
    if (x.size() != inst.n)
        throw shape_error("sign vector length " + std::to_string(x.size()) +
                          " does not match n=" + std::to_string(inst.n));
    double sum = 0.0;
    for (std::size_t j = 0; j < inst.m; ++j) {
        const double* row = inst.h.row(j);
        double v = 0.0;
        for (std::size_t i = 0; i < inst.n; ++i) v += row[i] * x[i];
        sum += std::abs(v);
    }
    return sum / (std::sqrt(static_cast<double>(inst.m)) * std::sqrt(static_cast<double>(inst.n)));
}

/// Bilinear objective y^T h x / (sqrt(m) sqrt(n)) for given sign vectors.
inline double bilinear_objective(const LittleInstance& inst, const std::vector<int>& x,
                                 const std::vector<int>& y) {
    if (x.size() != inst.n || y.size() != inst.m)
        throw shape_error("sign vector lengths do not match instance dimensions");
    double sum = 0.0;
    for (std::size_t j = 0; j < inst.m; ++j) {
        const double* row = inst.h.row(j);
        double v = 0.0;
        for (std::size_t i = 0; i < inst.n; ++i) v += row[i] * x[i];
        sum += y[j] * v;
    }
    return sum / (std::sqrt(static_cast<double>(inst.m)) * std::sqrt(static_cast<double>(inst.n)));
}

/// Quadratic objective (1/n) sum_{i<j} hs(i,j) x_i x_j for a sign vector x.
inline double quadratic_objective(const SymmetricInstance& sym, const std::vector<int>& x) {
    if (x.size() != sym.n)
        throw shape_error("sign vector length " + std::to_string(x.size()) +
                          " does not match n=" + std::to_string(sym.n));
    double sum = 0.0;
    for (std::size_t i = 0; i < sym.n; ++i) {
        const double* row = sym.hs.row(i);
        for (std::size_t j = i + 1; j < sym.n; ++j) sum += row[j] * x[i] * x[j];
    }
    return sum / static_cast<double>(sym.n);
}

namespace detail {

/// Gray-code walk over the 2^(n-1) sign configurations with x[0] = +1 fixed
/// (the objective is invariant under x -> -x).  Maintains v = h x under
/// single-spin flips, recomputing ||v||_1 from v in full every step so that
/// only v itself accumulates increments.  Every recompute_period steps v is
/// rebuilt from scratch and the deviation recorded.
inline GroundStateResult enumerate_l1(const LittleInstance& inst, const SolverLimits& limits,
                                      bool maximize) {
    const auto t0 = std::chrono::steady_clock::now();
    require_limits(limits);
    require_finite(inst.h);
    if (inst.n == 0 || inst.m == 0) throw size_error("instance dimensions must be positive");
    if (inst.n > static_cast<std::size_t>(limits.max_n_enumeration))
        throw size_error("n=" + std::to_string(inst.n) + " exceeds enumeration cap " +
                         std::to_string(limits.max_n_enumeration));

    const std::size_t m = inst.m, n = inst.n;
    std::vector<double> colmaj(m * n);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i) colmaj[i * m + j] = inst.h(j, i);

    std::vector<double> x(n, 1.0);
    std::vector<double> v(m, 0.0);
    auto rebuild = [&](std::vector<double>& out) {
        for (std::size_t j = 0; j < m; ++j) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += colmaj[i * m + j] * x[i];
            out[j] = s;
        }
    };
    rebuild(v);

    double cur = 0.0;
    for (std::size_t j = 0; j < m; ++j) cur += std::abs(v[j]);
    double best = cur;
    std::vector<double> best_x = x;
    double max_drift = 0.0;
    std::vector<double> fresh(m);

    const std::uint64_t configs = 1ull << (n - 1);
    for (std::uint64_t t = 1; t < configs; ++t) {
        const std::size_t i = static_cast<std::size_t>(std::countr_zero(t)) + 1;
        const double d = -2.0 * x[i];
        x[i] = -x[i];
        const double* ci = &colmaj[i * m];
        double s = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            v[j] += d * ci[j];
            s += std::abs(v[j]);
        }
        cur = s;
        const bool improved = maximize ? (cur > best) : (cur < best);
        if (improved) {
            best = cur;
            best_x = x;
        }
        if (t % limits.recompute_period == 0) {
            rebuild(fresh);
            for (std::size_t j = 0; j < m; ++j)
                max_drift = std::max(max_drift, std::abs(v[j] - fresh[j]));
            v = fresh;
        }
    }

    GroundStateResult res;
    res.assignment.x = to_signs(best_x);
    x = best_x;
    rebuild(fresh);
    double l1 = 0.0;
    std::vector<int> y(m);
    for (std::size_t j = 0; j < m; ++j) {
        l1 += std::abs(fresh[j]);
        y[j] = fresh[j] >= 0.0 ? 1 : -1;
    }
    res.assignment.y = std::move(y);
    res.value = l1 / (std::sqrt(static_cast<double>(m)) * std::sqrt(static_cast<double>(n)));
    res.scaled = res.value / std::sqrt(static_cast<double>(n));
    res.configs_visited = configs;
    res.max_refresh_drift = max_drift;
    res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

} // namespace detail

/// Exact maximum of y^T h x over sign vectors, in the 1/(sqrt(m) sqrt(n))
/// normalization.  The inner maximum over y is analytic (y = sign(h x)), so
/// only the 2^(n-1) essentially distinct x-configurations are enumerated.
inline GroundStateResult solve_max(const LittleInstance& inst, const SolverLimits& limits = {}) {
    return detail::enumerate_l1(inst, limits, true);
}

/// Exact min over x of max over y of y^T h x, same normalization and
/// enumeration strategy as solve_max.
inline GroundStateResult solve_minmax(const LittleInstance& inst, const SolverLimits& limits = {}) {
    return detail::enumerate_l1(inst, limits, false);
}

/// Exact maximum of (1/n) sum_{i<j} hs(i,j) x_i x_j over sign vectors.
/// Maintains local fields f = hs x under single-spin flips; the flip of
/// spin i changes the objective by -2 x_i f_i before the flip.
inline GroundStateResult solve_sk(const SymmetricInstance& sym, const SolverLimits& limits = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    detail::require_limits(limits);
    detail::require_finite(sym.hs);
    const std::size_t n = sym.n;
    if (n == 0) throw size_error("instance dimensions must be positive");
    if (sym.hs.rows != n || sym.hs.cols != n)
        throw shape_error("symmetric instance matrix is not n x n");
    if (n > static_cast<std::size_t>(limits.max_n_enumeration))
        throw size_error("n=" + std::to_string(n) + " exceeds enumeration cap " +
                         std::to_string(limits.max_n_enumeration));
    for (std::size_t i = 0; i < n; ++i) {
        if (sym.hs(i, i) != 0.0) throw data_error("symmetric instance has a nonzero diagonal");
        for (std::size_t j = i + 1; j < n; ++j)
            if (sym.hs(i, j) != sym.hs(j, i))
                throw data_error("symmetric instance matrix is not exactly symmetric");
    }

    std::vector<double> x(n, 1.0);
    std::vector<double> f(n, 0.0);
    auto rebuild_f = [&](std::vector<double>& out) {
        for (std::size_t i = 0; i < n; ++i) {
            const double* row = sym.hs.row(i);
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += row[j] * x[j];
            out[i] = s;
        }
    };
    auto energy_of = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double* row = sym.hs.row(i);
            for (std::size_t j = i + 1; j < n; ++j) s += row[j] * x[i] * x[j];
        }
        return s;
    };
    rebuild_f(f);
    double cur = energy_of();
    double best = cur;
    std::vector<double> best_x = x;
    double max_drift = 0.0;
    std::vector<double> fresh(n);

    const std::uint64_t configs = 1ull << (n - 1);
    for (std::uint64_t t = 1; t < configs; ++t) {
        const std::size_t i = static_cast<std::size_t>(std::countr_zero(t)) + 1;
        cur -= 2.0 * x[i] * f[i];
        x[i] = -x[i];
        const double twice = 2.0 * x[i];
        const double* row = sym.hs.row(i);
        for (std::size_t j = 0; j < n; ++j) f[j] += twice * row[j];
        if (cur > best) {
            best = cur;
            best_x = x;
        }
        if (t % limits.recompute_period == 0) {
            rebuild_f(fresh);
            for (std::size_t j = 0; j < n; ++j)
                max_drift = std::max(max_drift, std::abs(f[j] - fresh[j]));
            f = fresh;
            const double e = energy_of();
            max_drift = std::max(max_drift, std::abs(cur - e));
            cur = e;
        }
    }

    GroundStateResult res;
    res.assignment.x = detail::to_signs(best_x);
    x = best_x;
    res.value = energy_of() / static_cast<double>(n);
    res.scaled = res.value / std::sqrt(static_cast<double>(n));
    res.configs_visited = configs;
    res.max_refresh_drift = max_drift;
    res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

/// Oracle for solve_max: enumerate all 2^n * 2^m sign pairs directly.
inline GroundStateResult brute_force_max(const LittleInstance& inst) {
    const auto t0 = std::chrono::steady_clock::now();
    detail::require_finite(inst.h);
    const std::size_t m = inst.m, n = inst.n;
    if (n == 0 || m == 0) throw size_error("instance dimensions must be positive");
    if (n + m > static_cast<std::size_t>(max_joint_brute_force_bits))
        throw size_error("n+m=" + std::to_string(n + m) + " exceeds joint enumeration cap " +
                         std::to_string(max_joint_brute_force_bits));

    std::vector<int> x(n), y(m);
    std::vector<double> v(m);
    double best = -std::numeric_limits<double>::infinity();
    std::vector<int> best_x, best_y;
    for (std::uint64_t xm = 0; xm < (1ull << n); ++xm) {
        for (std::size_t i = 0; i < n; ++i) x[i] = (xm >> i) & 1 ? -1 : 1;
        for (std::size_t j = 0; j < m; ++j) {
            const double* row = inst.h.row(j);
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += row[i] * x[i];
            v[j] = s;
        }
        for (std::uint64_t ym = 0; ym < (1ull << m); ++ym) {
            double obj = 0.0;
            for (std::size_t j = 0; j < m; ++j) obj += ((ym >> j) & 1 ? -1.0 : 1.0) * v[j];
            if (obj > best) {
                best = obj;
                best_x = x;
                best_y.resize(m);
                for (std::size_t j = 0; j < m; ++j) best_y[j] = (ym >> j) & 1 ? -1 : 1;
            }
        }
    }

    GroundStateResult res;
    res.value = best / (std::sqrt(static_cast<double>(m)) * std::sqrt(static_cast<double>(n)));
    res.scaled = res.value / std::sqrt(static_cast<double>(n));
    res.assignment.x = std::move(best_x);
    res.assignment.y = std::move(best_y);
    res.configs_visited = (1ull << n) * (1ull << m);
    res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

/// Oracle for solve_minmax: scan all 2^n x-configurations, computing the
/// inner maximum over y analytically for each.
inline GroundStateResult brute_force_minmax(const LittleInstance& inst) {
    const auto t0 = std::chrono::steady_clock::now();
    detail::require_finite(inst.h);
    const std::size_t m = inst.m, n = inst.n;
    if (n == 0 || m == 0) throw size_error("instance dimensions must be positive");
    if (n > static_cast<std::size_t>(max_minmax_brute_force_bits))
        throw size_error("n=" + std::to_string(n) + " exceeds scan cap " +
                         std::to_string(max_minmax_brute_force_bits));

    std::vector<int> x(n);
    std::vector<double> v(m);
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> best_x, best_y;
    for (std::uint64_t xm = 0; xm < (1ull << n); ++xm) {
        for (std::size_t i = 0; i < n; ++i) x[i] = (xm >> i) & 1 ? -1 : 1;
        double l1 = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double* row = inst.h.row(j);
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += row[i] * x[i];
            v[j] = s;
            l1 += std::abs(s);
        }
        if (l1 < best) {
            best = l1;
            best_x = x;
            best_y.resize(m);
            for (std::size_t j = 0; j < m; ++j) best_y[j] = v[j] >= 0.0 ? 1 : -1;
        }
    }

    GroundStateResult res;
    res.value = best / (std::sqrt(static_cast<double>(m)) * std::sqrt(static_cast<double>(n)));
    res.scaled = res.value / std::sqrt(static_cast<double>(n));
    res.assignment.x = std::move(best_x);
    res.assignment.y = std::move(best_y);
    res.configs_visited = 1ull << n;
    res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

} // namespace little
