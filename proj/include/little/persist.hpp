#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "json.hpp"

#include "little/errors.hpp"
#include "little/harness.hpp"

namespace little {

/// Shortest decimal string that parses back to exactly the same double.
inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw data_error("malformed number '" + std::string(s) + "'");
    return v;
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw io_error("write to '" + path + "' failed");
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw io_error("read from '" + path + "' failed");
    return buf.str();
}

/// One experiment as a flat JSON object.  These nine keys are the stable
/// machine contract; nothing schedule-dependent (workers, timings) goes in.
inline nlohmann::json trial_stats_json(const ExperimentConfig& cfg, const TrialStats& stats) {
    nlohmann::json j;
    j["problem"] = to_string(cfg.problem);
    j["m"] = static_cast<std::uint64_t>(cfg.problem == Problem::sk ? cfg.n : cfg.m);
    j["n"] = static_cast<std::uint64_t>(cfg.n);
    j["dist"] = to_string(cfg.dist);
    j["trials"] = cfg.trials;
    j["mean"] = stats.mean;
    j["std"] = stats.std;
    j["ci95"] = stats.ci95;
    j["seed"] = cfg.master_seed;
    return j;
}

struct TrialStatsRecord {
    std::string problem;
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    std::string dist;
    std::uint64_t trials = 0;
    double mean = 0.0;
    double std = 0.0;
    double ci95 = 0.0;
    std::uint64_t seed = 0;
};

inline TrialStatsRecord trial_stats_from_json(const nlohmann::json& j) {
    TrialStatsRecord r;
    try {
        r.problem = j.at("problem").get<std::string>();
        r.m = j.at("m").get<std::uint64_t>();
        r.n = j.at("n").get<std::uint64_t>();
        r.dist = j.at("dist").get<std::string>();
        r.trials = j.at("trials").get<std::uint64_t>();
        r.mean = j.at("mean").get<double>();
        r.std = j.at("std").get<double>();
        r.ci95 = j.at("ci95").get<double>();
        r.seed = j.at("seed").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw data_error(std::string("bad experiment record: ") + e.what());
    }
    return r;
}

inline constexpr std::string_view sweep_csv_header =
    "axis,value,mean,std,ci95,sk_lower,rs_upper,lowered_upper,"
    "minmax_simple_lower,minmax_lifted_lower";

inline std::string sweep_csv(const SweepResult& sweep) {
    std::string out(sweep_csv_header);
    out += '\n';
    for (const SweepPoint& p : sweep.points) {
        out += to_string(sweep.axis);
        out += ',';
        out += format_double(p.axis_value);
        out += ',';
        out += format_double(p.stats.mean);
        out += ',';
        out += format_double(p.stats.std);
        out += ',';
        out += format_double(p.stats.ci95);
        out += ',';
        out += format_double(p.bounds.sk_lower);
        out += ',';
        out += format_double(p.bounds.rs_upper);
        out += ',';
        out += format_double(p.bounds.lowered_upper);
        out += ',';
        out += format_double(p.bounds.minmax_simple_lower);
        out += ',';
        out += format_double(p.bounds.minmax_lifted_lower);
        out += '\n';
    }
    return out;
}

struct SweepCsvRow {
    std::string axis;
    double value = 0.0;
    double mean = 0.0;
    double std = 0.0;
    double ci95 = 0.0;
    double sk_lower = 0.0;
    double rs_upper = 0.0;
    double lowered_upper = 0.0;
    double minmax_simple_lower = 0.0;
    double minmax_lifted_lower = 0.0;
};

inline std::vector<SweepCsvRow> parse_sweep_csv(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    if (lines.empty() || lines[0] != sweep_csv_header)
        throw data_error("sweep CSV header missing or unrecognized");

    std::vector<SweepCsvRow> rows;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const std::string& line = lines[li];
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        for (char c : line) {
            if (c == ',') {
                cells.push_back(cell);
                cell.clear();
            } else {
                cell += c;
            }
        }
        cells.push_back(cell);
        if (cells.size() != 10)
            throw data_error("sweep CSV row " + std::to_string(li) + " has " +
                             std::to_string(cells.size()) + " cells, expected 10");
        SweepCsvRow r;
        r.axis = cells[0];
        r.value = parse_double(cells[1]);
        r.mean = parse_double(cells[2]);
        r.std = parse_double(cells[3]);
        r.ci95 = parse_double(cells[4]);
        r.sk_lower = parse_double(cells[5]);
        r.rs_upper = parse_double(cells[6]);
        r.lowered_upper = parse_double(cells[7]);
        r.minmax_simple_lower = parse_double(cells[8]);
        r.minmax_lifted_lower = parse_double(cells[9]);
        rows.push_back(std::move(r));
    }
    return rows;
}

/// Two-column file (axis value, mean) for external plotting tools.
inline std::string plot_data(const SweepResult& sweep) {
    std::string out;
    out += "# problem " + to_string(sweep.problem) + "\n";
    out += "# dist " + to_string(sweep.dist) + "\n";
    out += "# trials " + std::to_string(sweep.trials) + "\n";
    out += "# seed " + std::to_string(sweep.master_seed) + "\n";
    out += "# columns: " + to_string(sweep.axis) + " mean\n";
    for (const SweepPoint& p : sweep.points)
        out += format_double(p.axis_value) + " " + format_double(p.stats.mean) + "\n";
    return out;
}

/// Write pre-rendered content to a file.
inline void persist(const std::string& content, const std::string& path) {
    write_text_file(path, content);
}

/// Write a JSON document to a file, one object per line.
inline void persist(const nlohmann::json& j, const std::string& path) {
    write_text_file(path, j.dump() + "\n");
}

inline nlohmann::json load_json(const std::string& path) {
    const std::string text = read_text_file(path);
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw data_error("file '" + path + "' is not valid JSON");
    return j;
}

inline std::vector<SweepCsvRow> load_sweep_csv(const std::string& path) {
    return parse_sweep_csv(read_text_file(path));
}

} // namespace little
