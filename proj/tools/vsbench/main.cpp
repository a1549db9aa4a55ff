#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"varsmooth benchmark harness: variable-smoothing solvers and "
                 "primal-dual baselines on TV denoising/deblurring"};
    app.require_subcommand(1);

    // run
    std::string config_path;
    std::string out_csv = "trace.csv";
    std::string out_image = "result.pgm";
    std::uint64_t seed_override = 0;
    bool seed_given = false;
    int sweep = 0;
    auto* run = app.add_subcommand("run", "run one experiment from a config file");
    run->add_option("--config", config_path, "key=value config file")->required();
    run->add_option("--out-csv", out_csv, "trace output path");
    run->add_option("--out-image", out_image, "final image output path");
    run->add_option("--seed", seed_override, "override the config seed")
        ->each([&](const std::string&) { seed_given = true; });
    run->add_option("--sweep", sweep, "run N consecutive seeds");

    // rate
    std::string rate_csv;
    std::int64_t k_min = 1;
    std::int64_t k_max = 1000000;
    auto* rate = app.add_subcommand("rate", "log-log slope of rel_objective vs k");
    rate->add_option("csv", rate_csv, "trace CSV")->required();
    rate->add_option("--k-min", k_min, "window lower bound");
    rate->add_option("--k-max", k_max, "window upper bound");

    // check
    std::uint64_t check_seed = 1;
    int trials = 500;
    auto* check = app.add_subcommand("check", "run the property suite");
    check->add_option("--seed", check_seed, "base seed");
    check->add_option("--trials", trials, "trials per property");

    // opnorm
    std::string op_name;
    std::int64_t m = 256, n = 256, blur_size = 9;
    double blur_sigma = 1.5;
    std::uint64_t op_seed = 1;
    auto* opnorm = app.add_subcommand("opnorm", "power-iteration norm estimate");
    opnorm->add_option("operator", op_name, "d1 | d2 | grad-stack | blur")->required();
    opnorm->add_option("m", m, "rows");
    opnorm->add_option("n", n, "cols");
    opnorm->add_option("--blur-size", blur_size, "blur kernel size");
    opnorm->add_option("--blur-sigma", blur_sigma, "blur kernel std dev");
    opnorm->add_option("--seed", op_seed, "start vector seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            vsbench::RunConfig cfg;
            try {
                cfg = vsbench::load_config(config_path);
            } catch (const vsbench::config_error& e) {
                std::cerr << e.what() << "\n";
                return 2;
            }
            if (seed_given) cfg.seed = seed_override;
            vsbench::RunPaths paths{out_csv, out_image};
            return sweep > 0 ? vsbench::cmd_sweep(cfg, paths, sweep)
                             : vsbench::cmd_run(cfg, paths);
        }
        if (*rate) return vsbench::cmd_rate(rate_csv, k_min, k_max);
        if (*check) return vsbench::cmd_check(check_seed, trials);
        if (*opnorm)
            return vsbench::cmd_opnorm(op_name, m, n, blur_size, blur_sigma, op_seed);
    } catch (const vsbench::config_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
