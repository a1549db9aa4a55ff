#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "config.hpp"

namespace vsbench {

struct RunPaths {
    std::filesystem::path csv = "trace.csv";
    std::filesystem::path image = "result.pgm";
};

/// Build the configured problem, compute the PDHG reference, run the
/// configured solver, and write the CSV trace plus the final PGM image.
/// Returns 0 on success, 3 on divergence (partial trace written).
int cmd_run(const RunConfig& cfg, const RunPaths& paths);

/// Sweep variant: `count` runs with seeds cfg.seed .. cfg.seed + count - 1,
/// output paths suffixed with _s<seed>.
int cmd_sweep(const RunConfig& cfg, const RunPaths& paths, int count);

/// Least-squares slope of log(rel_objective) vs log(k) over [k_min, k_max].
int cmd_rate(const std::filesystem::path& csv, std::int64_t k_min, std::int64_t k_max,
             double* slope_out = nullptr);

/// Run the property registry; prints one PASS/FAIL line per property.
int cmd_check(std::uint64_t seed, int trials);

/// Power-iteration estimate and analytic bound for a named operator.
int cmd_opnorm(const std::string& which, std::int64_t m, std::int64_t n,
               std::int64_t blur_size, double blur_sigma, std::uint64_t seed);

} // namespace vsbench
