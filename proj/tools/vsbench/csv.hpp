#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "varsmooth/solvers.hpp"

namespace vsbench {

/// Header comment block + the reference values the relative objective is
/// computed against.
struct TraceMeta {
    std::vector<std::pair<std::string, std::string>> comments;
    double f0 = 0.0;
    double f_star = 0.0;
};

/// Write `# key=value` comment lines, the fixed header
/// k,wall_ms,objective,smoothed_objective,rel_objective,dist_to_ref,mu,gamma,t
/// and one row per trace entry. rel_objective = (F - F*) / (F0 - F*).
void write_trace_csv(const std::filesystem::path& path, const varsmooth::Trace& trace,
                     const TraceMeta& meta);

/// Companion gnuplot script for the relative-objective decay.
void write_gnuplot_script(const std::filesystem::path& csv_path);

struct CsvRow {
    std::int64_t k;
    double rel_objective;
};

/// Read back the k and rel_objective columns, skipping comments.
std::vector<CsvRow> read_trace_csv(const std::filesystem::path& path);

/// Least-squares slope of log(rel) vs log(k) over k in [k_min, k_max].
/// Rows with nonpositive rel or k are skipped and counted in `clipped`.
struct RateFit {
    double slope = 0.0;
    std::size_t used = 0;
    std::size_t clipped = 0;
};
RateFit fit_loglog_slope(const std::vector<CsvRow>& rows, std::int64_t k_min,
                         std::int64_t k_max);

} // namespace vsbench
