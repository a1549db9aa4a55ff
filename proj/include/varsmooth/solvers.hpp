#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "varsmooth/moreau.hpp"
#include "varsmooth/schedules.hpp"

namespace varsmooth {

/// min f(x) + sum_i g_i(K_i x) with every g_i Lipschitz. norm_k2 is the
/// value used as ||K||^2 by schedules and step rules; the builders default
/// it to the sum of squared per-term norm bounds.
struct CompositeProblem {
    ProxFunction f;
    std::vector<SmoothedTerm> terms;
    double norm_k2 = 0.0;

    const std::vector<Shape>& domain() const;
    double sum_lipschitz2() const; // sum_i L_i^2
    double max_part_norm() const;  // max_i ||K_i|| bound
    double objective(const BlockVector& x) const;
    double smoothed(double mu, const BlockVector& x) const;
    void validate() const;
};

/// Assemble a problem and fill norm_k2 = sum_i ||K_i||_bound^2.
CompositeProblem make_problem(ProxFunction f, std::vector<SmoothedTerm> terms);

/// Full gradient, or independent Bernoulli(p_i) masks with 1/p_i debiasing
/// applied per summand.
struct GradEstimator {
    static GradEstimator full();
    static GradEstimator bernoulli(std::vector<double> probs, RngStream rng);

    bool stochastic = false;
    std::vector<double> probs;
    RngStream rng{0};
};

/// One (possibly stochastic) evaluation of the smoothed composite gradient
/// at y. `evals`, when given, is incremented once per computed term.
BlockVector estimate_smoothed_grad(const CompositeProblem& p, double mu, const BlockVector& y,
                                   GradEstimator& est, std::int64_t* evals = nullptr);

struct TraceRow {
    std::int64_t k = 0;
    double wall_ms = 0.0;
    double objective = 0.0;
    double smoothed = 0.0; // F^k(x_k); equals objective for the unsmoothed solvers
    double mu = 0.0;
    double gamma = 0.0;
    double t = 0.0;
    std::optional<double> dist_to_ref;
    std::int64_t grad_evals = 0;
};

struct Trace {
    std::vector<TraceRow> rows;
};

/// Raised when the objective blows past 10^6 times its initial value (or
/// turns non-finite); carries the rows recorded so far.
class solver_diverged : public std::runtime_error {
public:
    solver_diverged(const std::string& what, Trace partial)
        : std::runtime_error(what), trace_(std::move(partial)) {}

    const Trace& partial_trace() const noexcept { return trace_; }

private:
    Trace trace_;
};

struct RunOptions {
    std::int64_t iters = 1000;
    std::int64_t trace_every = 1;
    const BlockVector* reference = nullptr; // enables the dist_to_ref column
};

struct SolverResult {
    BlockVector x_final;
    Trace trace;
    std::int64_t iterations = 0;
    std::optional<std::uint64_t> seed;
};

/// Accelerated variable-smoothing scheme:
///   x_k = prox_{gamma_k f}(y_{k-1} - gamma_k * grad F^k(y_{k-1})),
///   y_k = x_k + (t_k - 1)/t_{k+1} * (x_k - x_{k-1}).
/// Deterministic; any schedule variant is accepted.
SolverResult run_vast(const CompositeProblem& p, const ScheduleKind& kind,
                      const BlockVector& x0, const RunOptions& opts);

/// Same scheme with the gradient replaced by an estimator draw each
/// iteration. With all p_i = 1 the iterates match run_vast bitwise.
SolverResult run_svast(const CompositeProblem& p, const ScheduleKind& kind, GradEstimator est,
                       const BlockVector& x0, const RunOptions& opts);

/// Primal-dual hybrid gradient over per-term duals:
///   y_i <- prox_{sigma_i g_i*}(y_i + sigma_i K_i xbar)  for every i,
///   x   <- prox_{tau f}(x - tau sum_i K_i* y_i),
///   xbar <- 2 x_new - x.
SolverResult run_pdhg(const CompositeProblem& p, double tau, std::vector<double> sigma,
                      const BlockVector& x0, const RunOptions& opts);

/// Stochastic variant: per iteration one term index is sampled from probs,
/// only its dual is updated, and the aggregate z = sum_i K_i* y_i feeds the
/// primal step through the 1/p_i-extrapolated estimate. With a single term
/// and p = 1 the iterates match run_pdhg bitwise.
SolverResult run_spdhg(const CompositeProblem& p, double tau, std::vector<double> sigma,
                       std::vector<double> probs, RngStream rng, const BlockVector& x0,
                       const RunOptions& opts);

/// Baseline step sizes: tau = sigma_i = rel / ||K|| with rel = 0.99.
struct PdhgSteps {
    double tau;
    std::vector<double> sigma;
};
PdhgSteps pdhg_default_steps(const CompositeProblem& p, double rel = 0.99);

/// Stochastic baseline: sigma_i = rel / ||K||, tau = rel / (m max_i ||K_i||).
PdhgSteps spdhg_default_steps(const CompositeProblem& p, double rel = 0.99);

} // namespace varsmooth
