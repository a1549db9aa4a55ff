#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>

#include "checks.hpp"
#include "csv.hpp"
#include "varsmooth/pgm.hpp"
#include "varsmooth/problems.hpp"

namespace vsbench {

using namespace varsmooth;

namespace {

std::string fmt(double v, int prec = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    return buf;
}

CompositeProblem build_problem(const RunConfig& cfg, BlockVector& data_out) {
    RngStream base(cfg.seed);
    RngStream phantom_rng = base.fork(1);
    auto truth = make_phantom(cfg.m, cfg.n, phantom_rng);

    ImageProblemSpec spec;
    spec.m = cfg.m;
    spec.n = cfg.n;
    spec.alpha = cfg.alpha;
    spec.noise_sigma = cfg.noise_sigma;
    spec.seed = base.fork(2).seed();
    if (cfg.problem == "deblur")
        spec.blur = BlurSpec{cfg.blur_size, cfg.blur_sigma, kernels::Boundary::symmetric};

    data_out = degrade(truth, spec);
    if (cfg.problem == "deblur")
        return build_deblurring(data_out, cfg.alpha,
                                BlurSpec{cfg.blur_size, cfg.blur_sigma,
                                         kernels::Boundary::symmetric});
    return build_denoising(data_out, cfg.alpha);
}

std::vector<double> resolve_probs(const RunConfig& cfg, std::size_t nterms) {
    if (!cfg.probs.empty()) {
        if (cfg.probs.size() != nterms)
            throw config_error("config: probs must list one value per term (" +
                               std::to_string(nterms) + ")");
        return cfg.probs;
    }
    return std::vector<double>(nterms, 0.5);
}

SolverResult dispatch_solver(const RunConfig& cfg, const CompositeProblem& p,
                             const BlockVector& x0, const RunOptions& opts,
                             std::vector<std::pair<std::string, std::string>>& params) {
    RngStream base(cfg.seed);
    if (cfg.solver == "vast" || cfg.solver == "vast-constmu") {
        const auto variant = cfg.solver == "vast" ? ScheduleVariant::vast_default
                                                  : ScheduleVariant::nesterov_const_mu;
        ScheduleKind kind{variant, cfg.b_param, p.norm_k2};
        params.emplace_back("mu1", fmt(cfg.b_param * p.norm_k2, 17));
        params.emplace_back("norm_k2", fmt(p.norm_k2, 17));
        return run_vast(p, kind, x0, opts);
    }
    if (cfg.solver == "svast") {
        ScheduleKind kind{ScheduleVariant::svast, cfg.b_param, p.norm_k2};
        auto est = GradEstimator::bernoulli(resolve_probs(cfg, p.terms.size()),
                                            base.fork(3));
        params.emplace_back("mu1", fmt(cfg.b_param * p.norm_k2, 17));
        params.emplace_back("norm_k2", fmt(p.norm_k2, 17));
        return run_svast(p, kind, std::move(est), x0, opts);
    }
    if (cfg.solver == "pdhg") {
        auto steps = pdhg_default_steps(p);
        params.emplace_back("tau", fmt(steps.tau, 17));
        params.emplace_back("sigma", fmt(steps.sigma.front(), 17));
        return run_pdhg(p, steps.tau, steps.sigma, x0, opts);
    }
    if (cfg.solver == "spdhg") {
        auto steps = spdhg_default_steps(p);
        params.emplace_back("tau", fmt(steps.tau, 17));
        params.emplace_back("sigma", fmt(steps.sigma.front(), 17));
        return run_spdhg(p, steps.tau, steps.sigma, resolve_probs(cfg, p.terms.size()),
                         base.fork(3), x0, opts);
    }
    throw config_error("config: unknown solver '" + cfg.solver + "'");
}

} // namespace

int cmd_run(const RunConfig& cfg, const RunPaths& paths) {
    BlockVector data;
    auto problem = build_problem(cfg, data);

    // Reference solution from a long PDHG run; F* is the best objective seen.
    auto ref_steps = pdhg_default_steps(problem);
    auto ref = run_pdhg(problem, ref_steps.tau, ref_steps.sigma, data,
                        {.iters = cfg.ref_iters, .trace_every = 1});
    double f_star = ref.trace.rows.front().objective;
    for (const auto& row : ref.trace.rows) f_star = std::min(f_star, row.objective);

    TraceMeta meta;
    meta.comments = cfg.echo();
    meta.f_star = f_star;

    RunOptions opts{.iters = cfg.iters, .trace_every = cfg.trace_every,
                    .reference = &ref.x_final};
    std::vector<std::pair<std::string, std::string>> solver_params;
    try {
        auto res = dispatch_solver(cfg, problem, data, opts, solver_params);
        meta.comments.insert(meta.comments.end(), solver_params.begin(), solver_params.end());
        meta.f0 = res.trace.rows.front().objective;
        write_trace_csv(paths.csv, res.trace, meta);
        write_gnuplot_script(paths.csv);
        save_pgm(res.x_final, paths.image);
        std::cout << "run: wrote " << paths.csv.string() << " and " << paths.image.string()
                  << " (F*=" << fmt(f_star) << ", final F=" << fmt(res.trace.rows.back().objective)
                  << ")\n";
        return 0;
    } catch (const solver_diverged& e) {
        meta.comments.insert(meta.comments.end(), solver_params.begin(), solver_params.end());
        meta.f0 = e.partial_trace().rows.empty() ? 0.0
                                                 : e.partial_trace().rows.front().objective;
        write_trace_csv(paths.csv, e.partial_trace(), meta);
        std::cerr << "run: " << e.what() << " (partial trace written)\n";
        return 3;
    }
}

int cmd_sweep(const RunConfig& cfg, const RunPaths& paths, int count) {
    if (count < 1) {
        std::cerr << "sweep: count must be >= 1\n";
        return 2;
    }
    int rc = 0;
    for (int i = 0; i < count; ++i) {
        RunConfig c = cfg;
        c.seed = cfg.seed + static_cast<std::uint64_t>(i);
        RunPaths p;
        auto suffix = [&](const std::filesystem::path& base) {
            std::filesystem::path out = base;
            out.replace_filename(base.stem().string() + "_s" + std::to_string(c.seed) +
                                 base.extension().string());
            return out;
        };
        p.csv = suffix(paths.csv);
        p.image = suffix(paths.image);
        rc = std::max(rc, cmd_run(c, p));
    }
    return rc;
}

int cmd_rate(const std::filesystem::path& csv, std::int64_t k_min, std::int64_t k_max,
             double* slope_out) {
    std::vector<CsvRow> rows;
    try {
        rows = read_trace_csv(csv);
    } catch (const std::exception& e) {
        std::cerr << "rate: " << e.what() << "\n";
        return 2;
    }
    auto fit = fit_loglog_slope(rows, k_min, k_max);
    if (fit.used < 10) {
        std::cerr << "rate: need >= 10 usable rows in [" << k_min << ", " << k_max
                  << "], found " << fit.used << "\n";
        return 2;
    }
    if (fit.clipped > 0)
        std::cout << "rate: clipped " << fit.clipped << " nonpositive rows\n";
    std::cout << "slope=" << fmt(fit.slope) << " over " << fit.used << " rows in [" << k_min
              << ", " << k_max << "]\n";
    if (slope_out) *slope_out = fit.slope;
    return 0;
}

int cmd_check(std::uint64_t seed, int trials) {
    if (trials < 1) {
        std::cerr << "check: trials must be >= 1\n";
        return 2;
    }
    auto reports = run_all_checks(seed, trials);
    bool all = true;
    std::string first_failure;
    for (const auto& r : reports) {
        if (r.passed) {
            std::cout << "PASS " << r.name << "\n";
        } else {
            all = false;
            if (first_failure.empty()) first_failure = r.name + ": " + r.message;
            std::cout << "FAIL " << r.name << ": " << r.message << "\n";
        }
    }
    if (!all) {
        std::cerr << "check: first counterexample -> " << first_failure << "\n";
        return 1;
    }
    return 0;
}

int cmd_opnorm(const std::string& which, std::int64_t m, std::int64_t n,
               std::int64_t blur_size, double blur_sigma, std::uint64_t seed) {
    LinearOperator op;
    if (which == "d1") {
        op = d1_rows(m, n);
    } else if (which == "d2") {
        op = d2_cols(m, n);
    } else if (which == "grad-stack") {
        op = stack({d1_rows(m, n), d2_cols(m, n)});
    } else if (which == "blur") {
        op = conv2d(gaussian_kernel(blur_size, blur_sigma), blur_size, blur_size, m, n);
    } else {
        std::cerr << "opnorm: unknown operator '" << which
                  << "' (expected d1, d2, grad-stack or blur)\n";
        return 2;
    }
    RngStream rng(seed);
    const double est = estimate_norm(op, 500, 1e-12, rng);
    std::cout << "estimate=" << fmt(est, 10) << " bound=" << fmt(op.norm_bound.value(), 10)
              << "\n";
    return 0;
}

} // namespace vsbench
