#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "little/errors.hpp"

namespace little {

/// Neumaier compensated sum in index order.  The result depends only on the
/// sequence of values, never on how work was scheduled, which is what makes
/// multi-worker experiments bit-identical to single-worker ones.
inline double compensated_sum(const std::vector<double>& values) {
    double sum = 0.0, comp = 0.0;
    for (double v : values) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    return sum + comp;
}

/// Summary statistics of one experiment's per-trial scaled energies.
struct TrialStats {
    double mean = 0.0;
    double std = 0.0;   // sample standard deviation (ddof = 1)
    double ci95 = 0.0;  // 1.96 * std / sqrt(trials)
    std::uint64_t trials = 0;
    std::vector<double> per_trial;
};

/// Aggregate per-trial values (in trial-index order) into TrialStats.
inline TrialStats compute_stats(std::vector<double> values) {
    if (values.empty()) throw data_error("cannot aggregate zero trials");
    for (double v : values)
        if (!std::isfinite(v)) throw data_error("non-finite trial value in aggregation");
    TrialStats s;
    s.trials = values.size();
    const double n = static_cast<double>(values.size());
    s.mean = compensated_sum(values) / n;
    if (values.size() > 1) {
        std::vector<double> sq(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) {
            const double d = values[i] - s.mean;
            sq[i] = d * d;
        }
        s.std = std::sqrt(compensated_sum(sq) / (n - 1.0));
        s.ci95 = 1.96 * s.std / std::sqrt(n);
    }
    s.per_trial = std::move(values);
    return s;
}

} // namespace little
