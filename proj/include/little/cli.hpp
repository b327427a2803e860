#pragma once

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "little/bounds.hpp"
#include "little/errors.hpp"
#include "little/harness.hpp"
#include "little/instance.hpp"
#include "little/persist.hpp"
#include "little/solvers.hpp"

namespace little {

enum class OutputFormat { json, csv, text };

namespace cli_detail {

inline OutputFormat format_from_string(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "text") return OutputFormat::text;
    throw usage_error("unknown format '" + s + "' (expected json, csv or text)");
}

inline std::string bool_str(bool b) { return b ? "true" : "false"; }

inline std::string signs_str(const std::vector<int>& s) {
    std::string out;
    out.reserve(s.size());
    for (int v : s) out += v > 0 ? '+' : '-';
    return out;
}

/// Stdout must stay byte-identical across runs and worker counts, so only
/// pure results are emitted; anything timing-related goes to the error
/// stream behind --verbose.
inline void emit(const std::string& content, const std::string& output_path, std::ostream& out) {
    if (output_path.empty())
        out << content;
    else
        persist(content, output_path);
}

inline int resolve_workers(const CLI::Option* flag, int flag_value) {
    if (flag != nullptr && flag->count() > 0) {
        if (flag_value < 1) throw usage_error("--workers must be >= 1");
        return flag_value;
    }
    if (const char* env = std::getenv("LITTLE_WORKERS")) {
        const std::string text(env);
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(text, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != text.size() || v < 1)
            throw usage_error("LITTLE_WORKERS must be a positive integer, got '" + text + "'");
        return static_cast<int>(v);
    }
    return 1;
}

inline nlohmann::json bound_report_json(const BoundReport& r) {
    nlohmann::json j;
    j["alpha"] = r.alpha;
    j["xi_sk"] = r.xi_sk;
    j["sk_lower"] = r.sk_lower;
    j["rs_upper"] = r.rs_upper;
    j["lowered_upper"] = r.lowered_upper;
    j["c3_star_upper"] = r.c3_star_upper;
    j["minmax_simple_lower"] = r.minmax_simple_lower;
    j["minmax_lifted_lower"] = r.minmax_lifted_lower;
    j["c3_star_minmax"] = r.c3_star_minmax;
    j["optimizer_iters_upper"] = r.optimizer_iters_upper;
    j["optimizer_iters_minmax"] = r.optimizer_iters_minmax;
    return j;
}

inline std::string bound_report_text(const BoundReport& r) {
    std::string out;
    out += "alpha " + format_double(r.alpha) + "\n";
    out += "xi_sk " + format_double(r.xi_sk) + "\n";
    out += "sk_lower " + format_double(r.sk_lower) + "\n";
    out += "rs_upper " + format_double(r.rs_upper) + "\n";
    out += "lowered_upper " + format_double(r.lowered_upper) + "\n";
    out += "c3_star_upper " + format_double(r.c3_star_upper) + "\n";
    out += "minmax_simple_lower " + format_double(r.minmax_simple_lower) + "\n";
    out += "minmax_lifted_lower " + format_double(r.minmax_lifted_lower) + "\n";
    out += "c3_star_minmax " + format_double(r.c3_star_minmax) + "\n";
    out += "optimizer_iters_upper " + std::to_string(r.optimizer_iters_upper) + "\n";
    out += "optimizer_iters_minmax " + std::to_string(r.optimizer_iters_minmax) + "\n";
    return out;
}

inline std::string bound_report_csv(const BoundReport& r) {
    std::string out =
        "alpha,xi_sk,sk_lower,rs_upper,lowered_upper,c3_star_upper,"
        "minmax_simple_lower,minmax_lifted_lower,c3_star_minmax,"
        "optimizer_iters_upper,optimizer_iters_minmax\n";
    out += format_double(r.alpha) + "," + format_double(r.xi_sk) + "," +
           format_double(r.sk_lower) + "," + format_double(r.rs_upper) + "," +
           format_double(r.lowered_upper) + "," + format_double(r.c3_star_upper) + "," +
           format_double(r.minmax_simple_lower) + "," + format_double(r.minmax_lifted_lower) +
           "," + format_double(r.c3_star_minmax) + "," +
           std::to_string(r.optimizer_iters_upper) + "," +
           std::to_string(r.optimizer_iters_minmax) + "\n";
    return out;
}

inline std::string trial_stats_text(const ExperimentConfig& cfg, const TrialStats& stats) {
    std::string out;
    out += "problem " + to_string(cfg.problem) + "\n";
    out += "m " + std::to_string(cfg.problem == Problem::sk ? cfg.n : cfg.m) + "\n";
    out += "n " + std::to_string(cfg.n) + "\n";
    out += "dist " + to_string(cfg.dist) + "\n";
    out += "trials " + std::to_string(cfg.trials) + "\n";
    out += "seed " + std::to_string(cfg.master_seed) + "\n";
    out += "mean " + format_double(stats.mean) + "\n";
    out += "std " + format_double(stats.std) + "\n";
    out += "ci95 " + format_double(stats.ci95) + "\n";
    return out;
}

struct CommonFlags {
    std::string problem = "max";
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    std::string dist = "gaussian";
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    int workers = 1;
    double xi_sk = default_xi_sk;
    std::string format;
    std::string output;
    bool verbose = false;
};

} // namespace cli_detail

/// Entry point shared by the real binary and the tests.  `args` excludes the
/// program name.  Returns the process exit code: 0 success, 2 flag/usage
/// errors, 3 domain errors (size caps, optimizer failures, bad data, I/O).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;

    CLI::App app{"Workbench for ground states of asymmetric bilinear spin models:\n"
                 "exact enumeration solvers, analytic energy bounds, and a seeded\n"
                 "Monte Carlo experiment harness."};
    app.name("little");
    app.require_subcommand(1);

    CommonFlags bounds_f, solve_f, exp_f, sweep_f, uni_f, cmp_f;
    double bounds_alpha = 1.0;
    std::vector<double> sweep_values;
    std::string sweep_axis = "n";
    std::string sweep_plot_out;

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "Evaluate the five energy bounds at one aspect ratio");
    bounds_cmd->add_option("--alpha", bounds_alpha, "Aspect ratio m/n (positive)")->required();
    bounds_cmd->add_option("--xi-sk", bounds_f.xi_sk, "Quadratic-form ground-state constant")->capture_default_str();
    bounds_cmd->add_option("--format", bounds_f.format, "Output format: json, csv or text (default text)")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    bounds_cmd->add_option("--output", bounds_f.output, "Write the report to this file instead of stdout");
    bounds_cmd->add_flag("--verbose", bounds_f.verbose, "Report timing on the error stream");

    CLI::App* solve_cmd = app.add_subcommand("solve", "Solve one seeded instance exactly");
    solve_cmd->add_option("--problem", solve_f.problem, "Problem: max, minmax or sk")
        ->required()
        ->check(CLI::IsMember({"max", "minmax", "sk"}));
    solve_cmd->add_option("--m", solve_f.m, "Row count m (ignored for sk)");
    solve_cmd->add_option("--n", solve_f.n, "Column count n")->required()->check(CLI::PositiveNumber);
    solve_cmd->add_option("--dist", solve_f.dist, "Entry distribution: gaussian or bernoulli")
        ->required()
        ->check(CLI::IsMember({"gaussian", "bernoulli"}));
    solve_cmd->add_option("--seed", solve_f.seed, "Instance seed")->required();
    solve_cmd->add_option("--format", solve_f.format, "Output format: json or text (default text)")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    solve_cmd->add_option("--output", solve_f.output, "Write the result to this file instead of stdout");
    solve_cmd->add_flag("--verbose", solve_f.verbose, "Report timing on the error stream");

    auto add_experiment_flags = [](CLI::App* cmd, CommonFlags& f, bool with_problem) {
        if (with_problem)
            cmd->add_option("--problem", f.problem, "Problem: max, minmax or sk")
                ->required()
                ->check(CLI::IsMember({"max", "minmax", "sk"}));
        cmd->add_option("--m", f.m, "Row count m (ignored for sk)");
        cmd->add_option("--n", f.n, "Column count n")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--dist", f.dist, "Entry distribution: gaussian or bernoulli")
            ->required()
            ->check(CLI::IsMember({"gaussian", "bernoulli"}));
        cmd->add_option("--trials", f.trials, "Number of Monte Carlo trials")
            ->required()
            ->check(CLI::PositiveNumber);
        cmd->add_option("--seed", f.seed, "Master seed")->required();
        cmd->add_option("--xi-sk", f.xi_sk, "Quadratic-form ground-state constant")->capture_default_str();
        cmd->add_option("--output", f.output, "Write the report to this file instead of stdout");
        cmd->add_flag("--verbose", f.verbose, "Report timing and worker count on the error stream");
    };

    CLI::App* exp_cmd = app.add_subcommand("experiment", "Monte Carlo average of one problem at one size");
    add_experiment_flags(exp_cmd, exp_f, true);
    CLI::Option* exp_workers =
        exp_cmd->add_option("--workers", exp_f.workers, "Worker threads (default: LITTLE_WORKERS or 1)");
    exp_cmd->add_option("--format", exp_f.format, "Output format: json, csv or text (default text)")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo averages across sizes or aspect ratios");
    add_experiment_flags(sweep_cmd, sweep_f, true);
    CLI::Option* sweep_workers =
        sweep_cmd->add_option("--workers", sweep_f.workers, "Worker threads (default: LITTLE_WORKERS or 1)");
    sweep_cmd->add_option("--axis", sweep_axis, "Sweep axis: n or alpha")
        ->required()
        ->check(CLI::IsMember({"n", "alpha"}));
    sweep_cmd->add_option("--values", sweep_values, "Comma-separated axis values")
        ->required()
        ->delimiter(',');
    sweep_cmd->add_option("--format", sweep_f.format, "Output format: json, csv or text (default csv)")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sweep_cmd->add_option("--plot-out", sweep_plot_out, "Also write a two-column plot data file here");

    CLI::App* uni_cmd = app.add_subcommand("universality", "Compare Gaussian and Bernoulli disorder at one size");
    uni_cmd->add_option("--m", uni_f.m, "Row count m")->required()->check(CLI::PositiveNumber);
    uni_cmd->add_option("--n", uni_f.n, "Column count n")->required()->check(CLI::PositiveNumber);
    uni_cmd->add_option("--trials", uni_f.trials, "Number of Monte Carlo trials per distribution")
        ->required()
        ->check(CLI::PositiveNumber);
    uni_cmd->add_option("--seed", uni_f.seed, "Master seed")->required();
    CLI::Option* uni_workers =
        uni_cmd->add_option("--workers", uni_f.workers, "Worker threads (default: LITTLE_WORKERS or 1)");
    uni_cmd->add_option("--format", uni_f.format, "Output format: json or text (default text)")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    uni_cmd->add_option("--output", uni_f.output, "Write the report to this file instead of stdout");
    uni_cmd->add_flag("--verbose", uni_f.verbose, "Report timing and worker count on the error stream");

    CLI::App* cmp_cmd = app.add_subcommand(
        "sk-compare", "Check the square bilinear maximum against two quadratic-form terms");
    cmp_cmd->add_option("--n", cmp_f.n, "Side length n of the square instances")
        ->required()
        ->check(CLI::PositiveNumber);
    cmp_cmd->add_option("--trials", cmp_f.trials, "Number of Monte Carlo trials")
        ->required()
        ->check(CLI::PositiveNumber);
    cmp_cmd->add_option("--seed", cmp_f.seed, "Master seed")->required();
    cmp_cmd->add_option("--xi-sk", cmp_f.xi_sk, "Quadratic-form ground-state constant")->capture_default_str();
    CLI::Option* cmp_workers =
        cmp_cmd->add_option("--workers", cmp_f.workers, "Worker threads (default: LITTLE_WORKERS or 1)");
    cmp_cmd->add_option("--format", cmp_f.format, "Output format: json or text (default text)")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmp_cmd->add_option("--output", cmp_f.output, "Write the report to this file instead of stdout");
    cmp_cmd->add_flag("--verbose", cmp_f.verbose, "Report timing and worker count on the error stream");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("little");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << e.what() << "\n";
        return 2;
    }

    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&t0] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    try {
        if (app.got_subcommand(bounds_cmd)) {
            const OutputFormat fmt = format_from_string(bounds_f.format.empty() ? "text" : bounds_f.format);
            const BoundReport r = bound_report(bounds_alpha, bounds_f.xi_sk);
            std::string content;
            if (fmt == OutputFormat::json)
                content = bound_report_json(r).dump() + "\n";
            else if (fmt == OutputFormat::csv)
                content = bound_report_csv(r);
            else
                content = bound_report_text(r);
            emit(content, bounds_f.output, out);
            if (bounds_f.verbose) err << "# elapsed_seconds " << elapsed() << "\n";
            return 0;
        }

        if (app.got_subcommand(solve_cmd)) {
            const OutputFormat fmt = format_from_string(solve_f.format.empty() ? "text" : solve_f.format);
            if (fmt == OutputFormat::csv)
                throw usage_error("csv format is not available for solve; use json or text");
            const Problem problem = problem_from_string(solve_f.problem);
            if (problem != Problem::sk && solve_f.m < 1)
                throw usage_error("--m is required for problems max and minmax");
            const Dist dist = dist_from_string(solve_f.dist);
            const std::size_t n = solve_f.n;
            const std::size_t m = problem == Problem::sk ? n : solve_f.m;

            GroundStateResult res;
            if (problem == Problem::max_little)
                res = solve_max(generate_instance(m, n, dist, solve_f.seed));
            else if (problem == Problem::minmax_little)
                res = solve_minmax(generate_instance(m, n, dist, solve_f.seed));
            else
                res = solve_sk(symmetrize(generate_instance(n, n, dist, solve_f.seed)));

            std::string content;
            if (fmt == OutputFormat::json) {
                nlohmann::json j;
                j["problem"] = to_string(problem);
                j["m"] = static_cast<std::uint64_t>(m);
                j["n"] = static_cast<std::uint64_t>(n);
                j["dist"] = to_string(dist);
                j["seed"] = solve_f.seed;
                j["value"] = res.value;
                j["scaled"] = res.scaled;
                j["configs_visited"] = res.configs_visited;
                j["max_refresh_drift"] = res.max_refresh_drift;
                j["x"] = signs_str(res.assignment.x);
                if (res.assignment.y) j["y"] = signs_str(*res.assignment.y);
                content = j.dump() + "\n";
            } else {
                content += "problem " + to_string(problem) + "\n";
                content += "m " + std::to_string(m) + "\n";
                content += "n " + std::to_string(n) + "\n";
                content += "dist " + to_string(dist) + "\n";
                content += "seed " + std::to_string(solve_f.seed) + "\n";
                content += "value " + format_double(res.value) + "\n";
                content += "scaled " + format_double(res.scaled) + "\n";
                content += "configs_visited " + std::to_string(res.configs_visited) + "\n";
                content += "max_refresh_drift " + format_double(res.max_refresh_drift) + "\n";
                content += "x " + signs_str(res.assignment.x) + "\n";
                if (res.assignment.y) content += "y " + signs_str(*res.assignment.y) + "\n";
            }
            emit(content, solve_f.output, out);
            if (solve_f.verbose)
                err << "# elapsed_seconds " << elapsed() << "\n# solver_seconds "
                    << res.elapsed_seconds << "\n";
            return 0;
        }

        if (app.got_subcommand(exp_cmd)) {
            const OutputFormat fmt = format_from_string(exp_f.format.empty() ? "text" : exp_f.format);
            ExperimentConfig cfg;
            cfg.problem = problem_from_string(exp_f.problem);
            if (cfg.problem != Problem::sk && exp_f.m < 1)
                throw usage_error("--m is required for problems max and minmax");
            cfg.m = exp_f.m;
            cfg.n = exp_f.n;
            cfg.dist = dist_from_string(exp_f.dist);
            cfg.trials = exp_f.trials;
            cfg.master_seed = exp_f.seed;
            cfg.workers = resolve_workers(exp_workers, exp_f.workers);
            const TrialStats stats = run_trials(cfg);
            const double alpha = cfg.problem == Problem::sk
                                     ? 1.0
                                     : static_cast<double>(cfg.m) / static_cast<double>(cfg.n);
            const BoundReport bounds = bound_report(alpha, exp_f.xi_sk);

            std::string content;
            if (fmt == OutputFormat::json) {
                nlohmann::json j;
                j["stats"] = trial_stats_json(cfg, stats);
                j["bounds"] = bound_report_json(bounds);
                content = j.dump() + "\n";
            } else if (fmt == OutputFormat::csv) {
                content =
                    "problem,m,n,dist,trials,mean,std,ci95,seed,alpha,xi_sk,sk_lower,rs_upper,"
                    "lowered_upper,minmax_simple_lower,minmax_lifted_lower\n";
                content += to_string(cfg.problem) + "," +
                           std::to_string(cfg.problem == Problem::sk ? cfg.n : cfg.m) + "," +
                           std::to_string(cfg.n) + "," + to_string(cfg.dist) + "," +
                           std::to_string(cfg.trials) + "," + format_double(stats.mean) + "," +
                           format_double(stats.std) + "," + format_double(stats.ci95) + "," +
                           std::to_string(cfg.master_seed) + "," + format_double(bounds.alpha) +
                           "," + format_double(bounds.xi_sk) + "," +
                           format_double(bounds.sk_lower) + "," + format_double(bounds.rs_upper) +
                           "," + format_double(bounds.lowered_upper) + "," +
                           format_double(bounds.minmax_simple_lower) + "," +
                           format_double(bounds.minmax_lifted_lower) + "\n";
            } else {
                content = trial_stats_text(cfg, stats) + bound_report_text(bounds);
            }
            emit(content, exp_f.output, out);
            if (exp_f.verbose)
                err << "# elapsed_seconds " << elapsed() << "\n# workers " << cfg.workers << "\n";
            return 0;
        }

        if (app.got_subcommand(sweep_cmd)) {
            const OutputFormat fmt = format_from_string(sweep_f.format.empty() ? "csv" : sweep_f.format);
            ExperimentConfig base;
            base.problem = problem_from_string(sweep_f.problem);
            if (base.problem != Problem::sk && sweep_f.m < 1)
                throw usage_error("--m is required for problems max and minmax");
            base.m = sweep_f.m;
            base.n = sweep_f.n;
            base.dist = dist_from_string(sweep_f.dist);
            base.trials = sweep_f.trials;
            base.master_seed = sweep_f.seed;
            base.workers = resolve_workers(sweep_workers, sweep_f.workers);
            const SweepResult result =
                sweep(base, axis_from_string(sweep_axis), sweep_values, sweep_f.xi_sk);

            std::string content;
            if (fmt == OutputFormat::csv) {
                content = sweep_csv(result);
            } else if (fmt == OutputFormat::json) {
                nlohmann::json j;
                j["axis"] = to_string(result.axis);
                j["problem"] = to_string(result.problem);
                j["dist"] = to_string(result.dist);
                j["trials"] = result.trials;
                j["seed"] = result.master_seed;
                nlohmann::json points = nlohmann::json::array();
                for (const SweepPoint& p : result.points) {
                    nlohmann::json pj;
                    pj["axis_value"] = p.axis_value;
                    pj["m"] = static_cast<std::uint64_t>(p.m);
                    pj["n"] = static_cast<std::uint64_t>(p.n);
                    pj["mean"] = p.stats.mean;
                    pj["std"] = p.stats.std;
                    pj["ci95"] = p.stats.ci95;
                    pj["bounds"] = bound_report_json(p.bounds);
                    points.push_back(std::move(pj));
                }
                j["points"] = std::move(points);
                content = j.dump() + "\n";
            } else {
                for (const SweepPoint& p : result.points) {
                    content += to_string(result.axis) + " " + format_double(p.axis_value) +
                               " mean " + format_double(p.stats.mean) + " std " +
                               format_double(p.stats.std) + " ci95 " +
                               format_double(p.stats.ci95) + "\n";
                }
            }
            emit(content, sweep_f.output, out);
            if (!sweep_plot_out.empty()) persist(plot_data(result), sweep_plot_out);
            if (sweep_f.verbose)
                err << "# elapsed_seconds " << elapsed() << "\n# workers " << base.workers << "\n";
            return 0;
        }

        if (app.got_subcommand(uni_cmd)) {
            const OutputFormat fmt = format_from_string(uni_f.format.empty() ? "text" : uni_f.format);
            if (fmt == OutputFormat::csv)
                throw usage_error("csv format is not available for universality; use json or text");
            const int workers = resolve_workers(uni_workers, uni_f.workers);
            const UniversalityReport rep =
                universality_compare(uni_f.m, uni_f.n, uni_f.trials, uni_f.seed, workers);

            std::string content;
            if (fmt == OutputFormat::json) {
                nlohmann::json j;
                j["m"] = static_cast<std::uint64_t>(rep.m);
                j["n"] = static_cast<std::uint64_t>(rep.n);
                j["trials"] = rep.trials;
                j["seed"] = rep.master_seed;
                j["gauss"] = {{"mean", rep.gauss.mean}, {"std", rep.gauss.std}, {"ci95", rep.gauss.ci95}};
                j["bern"] = {{"mean", rep.bern.mean}, {"std", rep.bern.std}, {"ci95", rep.bern.ci95}};
                j["difference"] = rep.difference;
                j["threshold"] = rep.threshold;
                j["compatible"] = rep.compatible;
                j["underpowered"] = rep.underpowered;
                content = j.dump() + "\n";
            } else {
                content += "m " + std::to_string(rep.m) + "\n";
                content += "n " + std::to_string(rep.n) + "\n";
                content += "trials " + std::to_string(rep.trials) + "\n";
                content += "seed " + std::to_string(rep.master_seed) + "\n";
                content += "gauss_mean " + format_double(rep.gauss.mean) + "\n";
                content += "gauss_std " + format_double(rep.gauss.std) + "\n";
                content += "gauss_ci95 " + format_double(rep.gauss.ci95) + "\n";
                content += "bern_mean " + format_double(rep.bern.mean) + "\n";
                content += "bern_std " + format_double(rep.bern.std) + "\n";
                content += "bern_ci95 " + format_double(rep.bern.ci95) + "\n";
                content += "difference " + format_double(rep.difference) + "\n";
                content += "threshold " + format_double(rep.threshold) + "\n";
                content += "compatible " + bool_str(rep.compatible) + "\n";
                content += "underpowered " + bool_str(rep.underpowered) + "\n";
            }
            emit(content, uni_f.output, out);
            if (uni_f.verbose)
                err << "# elapsed_seconds " << elapsed() << "\n# workers " << workers << "\n";
            return 0;
        }

        if (app.got_subcommand(cmp_cmd)) {
            const OutputFormat fmt = format_from_string(cmp_f.format.empty() ? "text" : cmp_f.format);
            if (fmt == OutputFormat::csv)
                throw usage_error("csv format is not available for sk-compare; use json or text");
            const int workers = resolve_workers(cmp_workers, cmp_f.workers);
            const SkComparisonReport rep =
                sk_comparison_report(cmp_f.n, cmp_f.trials, cmp_f.seed, cmp_f.xi_sk, workers);

            std::string content;
            if (fmt == OutputFormat::json) {
                nlohmann::json j;
                j["n"] = static_cast<std::uint64_t>(rep.n);
                j["trials"] = rep.trials;
                j["seed"] = rep.master_seed;
                j["xi_sk"] = rep.xi_sk;
                j["left"] = {{"mean", rep.left.mean}, {"std", rep.left.std}, {"ci95", rep.left.ci95}};
                j["right"] = {{"mean", rep.right.mean}, {"std", rep.right.std}, {"ci95", rep.right.ci95}};
                j["combined_ci3"] = rep.combined_ci3;
                j["direction_holds"] = rep.direction_holds;
                j["asymptotic_lower"] = rep.asymptotic_lower;
                content = j.dump() + "\n";
            } else {
                content += "n " + std::to_string(rep.n) + "\n";
                content += "trials " + std::to_string(rep.trials) + "\n";
                content += "seed " + std::to_string(rep.master_seed) + "\n";
                content += "xi_sk " + format_double(rep.xi_sk) + "\n";
                content += "left_mean " + format_double(rep.left.mean) + "\n";
                content += "left_std " + format_double(rep.left.std) + "\n";
                content += "left_ci95 " + format_double(rep.left.ci95) + "\n";
                content += "right_mean " + format_double(rep.right.mean) + "\n";
                content += "right_std " + format_double(rep.right.std) + "\n";
                content += "right_ci95 " + format_double(rep.right.ci95) + "\n";
                content += "combined_ci3 " + format_double(rep.combined_ci3) + "\n";
                content += "direction_holds " + bool_str(rep.direction_holds) + "\n";
                content += "asymptotic_lower " + format_double(rep.asymptotic_lower) + "\n";
            }
            emit(content, cmp_f.output, out);
            if (cmp_f.verbose)
                err << "# elapsed_seconds " << elapsed() << "\n# workers " << workers << "\n";
            return 0;
        }
    } catch (const usage_error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << "\n";
        return 3;
    }
    err << "error: usage: no subcommand selected\n";
    return 2;
}

inline int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

} // namespace little
