#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace vsbench {

/// One experiment, read from a flat key=value file ('#' starts a comment).
/// Recognized keys: problem, solver, m, n, alpha, noise_sigma, blur_size,
/// blur_sigma, b_param, iters, trace_every, seed, ref_iters, probs.
struct RunConfig {
    std::string problem = "denoise"; // denoise | deblur
    std::string solver = "vast";     // vast | vast-constmu | svast | pdhg | spdhg
    std::int64_t m = 64;
    std::int64_t n = 64;
    double alpha = 2.0; // defaults to 2 (denoise) or 10 (deblur) when absent
    double noise_sigma = 0.1;
    std::int64_t blur_size = 9;
    double blur_sigma = 1.5;
    double b_param = 0.05;
    std::int64_t iters = 2000;
    std::int64_t trace_every = 10;
    std::uint64_t seed = 1;
    std::int64_t ref_iters = 20000;
    std::vector<double> probs; // stochastic solvers; default 0.5 per term

    /// The key=value pairs echoed into trace headers, in a fixed order.
    std::vector<std::pair<std::string, std::string>> echo() const;
};

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

} // namespace vsbench
