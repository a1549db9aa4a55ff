#include "varsmooth/solvers.hpp"

#include <chrono>
#include <cmath>

#include "varsmooth/kernels.hpp"

namespace varsmooth {

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(clock_t::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(clock_t::now() - start_).count();
    }

private:
    using clock_t = std::chrono::steady_clock;
    clock_t::time_point start_;
};

void require_probs(const std::vector<double>& probs, std::size_t nterms, const char* who) {
    if (probs.size() != nterms)
        throw param_error(std::string(who) + ": one probability per term required");
    for (double p : probs)
        if (!(p > 0.0) || p > 1.0)
            throw param_error(std::string(who) + ": probabilities must lie in (0, 1]");
}

} // namespace

const std::vector<Shape>& CompositeProblem::domain() const {
    return terms.front().op.domain;
}

double CompositeProblem::sum_lipschitz2() const {
    double s = 0.0;
    for (const auto& t : terms) s += t.lipschitz * t.lipschitz;
    return s;
}

double CompositeProblem::max_part_norm() const {
    double m = 0.0;
    for (const auto& t : terms) m = std::max(m, t.op.norm_bound.value_or(0.0));
    return m;
}

double CompositeProblem::objective(const BlockVector& x) const {
    double v = f.eval(x);
    for (const auto& t : terms) v += t.g.eval(t.op.apply(x));
    return v;
}

double CompositeProblem::smoothed(double mu, const BlockVector& x) const {
    return smoothed_objective(f, terms, mu, x);
}

void CompositeProblem::validate() const {
    if (terms.empty()) throw param_error("CompositeProblem: needs at least one term");
    for (const auto& t : terms) {
        if (t.op.domain != terms.front().op.domain)
            throw shape_error("CompositeProblem: terms must share one domain");
        if (!(t.lipschitz > 0))
            throw param_error("CompositeProblem: every g_i needs a finite L_i > 0");
    }
    if (!(norm_k2 > 0)) throw param_error("CompositeProblem: normK2 must be > 0");
}

CompositeProblem make_problem(ProxFunction f, std::vector<SmoothedTerm> terms) {
    CompositeProblem p;
    p.f = std::move(f);
    p.terms = std::move(terms);
    double sq = 0.0;
    for (const auto& t : p.terms) {
        if (!t.op.norm_bound)
            throw param_error("make_problem: every operator needs a norm bound "
                              "(use estimate_norm and set one)");
        sq += *t.op.norm_bound * *t.op.norm_bound;
    }
    p.norm_k2 = sq;
    p.validate();
    return p;
}

GradEstimator GradEstimator::full() { return GradEstimator{}; }

GradEstimator GradEstimator::bernoulli(std::vector<double> probs, RngStream rng) {
    GradEstimator e;
    e.stochastic = true;
    e.probs = std::move(probs);
    e.rng = rng;
    return e;
}

BlockVector estimate_smoothed_grad(const CompositeProblem& p, double mu, const BlockVector& y,
                                   GradEstimator& est, std::int64_t* evals) {
    if (est.stochastic) require_probs(est.probs, p.terms.size(), "estimate_smoothed_grad");
    BlockVector g(p.domain());
    for (std::size_t i = 0; i < p.terms.size(); ++i) {
        double weight = 1.0;
        if (est.stochastic) {
            const bool hit = est.rng.next_unit() < est.probs[i];
            if (!hit) continue;
            weight = 1.0 / est.probs[i];
        }
        const auto& term = p.terms[i];
        BlockVector gi = term.op.adjoint(envelope_grad(term.g, mu, term.op.apply(y)));
        kernels::axpby(1.0, g.data(), weight, gi.data(), g.data());
        if (evals) ++*evals;
    }
    return g;
}

namespace {

struct TraceBuilder {
    TraceBuilder(const CompositeProblem& p, const RunOptions& o) : problem(&p), opts(&o) {}

    const CompositeProblem* problem;
    const RunOptions* opts;
    Stopwatch clock;
    Trace trace;
    double guard = 0.0; // divergence threshold, set from the first row

    // mu <= 0 means "no smoothing": the smoothed column repeats the objective.
    void record(std::int64_t k, const BlockVector& x, double mu, double gamma, double t,
                std::int64_t evals) {
        TraceRow row;
        row.k = k;
        row.wall_ms = clock.ms();
        row.objective = problem->objective(x);
        row.smoothed = mu > 0 ? problem->smoothed(mu, x) : row.objective;
        row.mu = mu > 0 ? mu : 0.0;
        row.gamma = gamma;
        row.t = t;
        row.grad_evals = evals;
        if (opts->reference) row.dist_to_ref = norm2(lincomb(1.0, x, -1.0, *opts->reference));
        trace.rows.push_back(row);

        if (k == 0) guard = 1e6 * std::max(1.0, std::abs(row.objective));
        if (!std::isfinite(row.objective) || row.objective > guard)
            throw solver_diverged("solver diverged: objective " +
                                      std::to_string(row.objective) + " at iteration " +
                                      std::to_string(k),
                                  trace);
    }

    bool due(std::int64_t k) const {
        return k == opts->iters || (opts->trace_every > 0 && k % opts->trace_every == 0);
    }
};

void check_run_inputs(const CompositeProblem& p, const BlockVector& x0, const RunOptions& opts) {
    p.validate();
    if (x0.shapes() != p.domain()) throw shape_error("solver: x0 does not match the domain");
    if (opts.iters < 1) throw param_error("solver: iters must be >= 1");
    if (opts.reference && !opts.reference->same_structure(x0))
        throw shape_error("solver: reference does not match the domain");
}

SolverResult run_accelerated(const CompositeProblem& p, const ScheduleKind& kind,
                             GradEstimator est, const BlockVector& x0, const RunOptions& opts) {
    check_run_inputs(p, x0, opts);
    if (est.stochastic) require_probs(est.probs, p.terms.size(), "run_svast");

    ScheduleState s = schedule_init(kind);
    BlockVector x = x0;
    BlockVector y = x0;
    BlockVector diff(x0.shapes());

    TraceBuilder tb(p, opts);
    std::int64_t evals = 0;
    tb.record(0, x0, s.mu, s.gamma, s.t, evals);

    for (std::int64_t k = 1; k <= opts.iters; ++k) {
        BlockVector xi = estimate_smoothed_grad(p, s.mu, y, est, &evals);
        BlockVector x_new = p.f.prox(lincomb(1.0, y, -s.gamma, xi), s.gamma);
        const ScheduleState next = schedule_advance(s, kind);
        const double beta = (s.t - 1.0) / next.t;
        lincomb_into(1.0, x_new, -1.0, x, diff);
        lincomb_into(1.0, x_new, beta, diff, y);
        x = std::move(x_new);
        if (tb.due(k)) tb.record(k, x, s.mu, s.gamma, s.t, evals);
        s = next;
    }

    SolverResult res;
    res.x_final = std::move(x);
    res.trace = std::move(tb.trace);
    res.iterations = opts.iters;
    if (est.stochastic) res.seed = est.rng.seed();
    return res;
}

// Shared primal-dual engine. `sampled` draws one term per iteration from
// `probs`; otherwise every dual is refreshed with weight 1. The aggregate
// z = sum_i K_i* y_i is maintained incrementally and the primal step uses
// zbar = z + sum_{i in S} (1/p_i) K_i*(y_i_new - y_i).
SolverResult run_primal_dual(const CompositeProblem& p, double tau,
                             const std::vector<double>& sigma, bool sampled,
                             std::vector<double> probs, RngStream rng, const BlockVector& x0,
                             const RunOptions& opts) {
    check_run_inputs(p, x0, opts);
    const std::size_t m = p.terms.size();
    if (!(tau > 0)) throw param_error("pdhg: tau must be > 0");
    if (sigma.size() != m) throw param_error("pdhg: one sigma per term required");
    for (double s : sigma)
        if (!(s > 0)) throw param_error("pdhg: sigma must be > 0");

    std::vector<double> select(m, 1.0);
    if (sampled) {
        double total = 0.0;
        for (double q : probs) {
            if (!(q > 0.0) || q > 1.0)
                throw param_error("spdhg: probabilities must lie in (0, 1]");
            total += q;
        }
        if (!(total > 0)) throw param_error("spdhg: probabilities must sum to > 0");
        for (std::size_t i = 0; i < m; ++i) select[i] = probs[i] / total;
    }

    BlockVector x = x0;
    BlockVector xbar = x0;
    std::vector<BlockVector> duals;
    duals.reserve(m);
    for (const auto& t : p.terms) duals.emplace_back(t.op.codomain);
    BlockVector z(p.domain());
    BlockVector delta(p.domain());
    BlockVector deltaw(p.domain());
    BlockVector zbar(p.domain());

    TraceBuilder tb(p, opts);
    std::int64_t evals = 0;
    tb.record(0, x0, 0.0, tau, 0.0, evals);

    for (std::int64_t k = 1; k <= opts.iters; ++k) {
        delta.set_zero();
        deltaw.set_zero();
        std::size_t lo = 0;
        std::size_t hi = m;
        if (sampled) {
            const double u = rng.next_unit();
            double cum = 0.0;
            std::size_t j = m - 1;
            for (std::size_t i = 0; i < m; ++i) {
                cum += select[i];
                if (u < cum) {
                    j = i;
                    break;
                }
            }
            lo = j;
            hi = j + 1;
        }
        for (std::size_t i = lo; i < hi; ++i) {
            const auto& term = p.terms[i];
            BlockVector d = lincomb(1.0, duals[i], sigma[i], term.op.apply(xbar));
            BlockVector y_new = conj_prox(term.g, d, sigma[i]);
            ++evals;
            BlockVector dz = term.op.adjoint(lincomb(1.0, y_new, -1.0, duals[i]));
            duals[i] = std::move(y_new);
            kernels::axpby(1.0, delta.data(), 1.0, dz.data(), delta.data());
            kernels::axpby(1.0, deltaw.data(), 1.0 / select[i], dz.data(), deltaw.data());
        }
        lincomb_into(1.0, z, 1.0, deltaw, zbar);
        lincomb_into(1.0, z, 1.0, delta, z);
        BlockVector x_new = p.f.prox(lincomb(1.0, x, -tau, zbar), tau);
        lincomb_into(2.0, x_new, -1.0, x, xbar);
        x = std::move(x_new);
        if (tb.due(k)) tb.record(k, x, 0.0, tau, 0.0, evals);
    }

    SolverResult res;
    res.x_final = std::move(x);
    res.trace = std::move(tb.trace);
    res.iterations = opts.iters;
    if (sampled) res.seed = rng.seed();
    return res;
}

} // namespace

SolverResult run_vast(const CompositeProblem& p, const ScheduleKind& kind, const BlockVector& x0,
                      const RunOptions& opts) {
    return run_accelerated(p, kind, GradEstimator::full(), x0, opts);
}

SolverResult run_svast(const CompositeProblem& p, const ScheduleKind& kind, GradEstimator est,
                       const BlockVector& x0, const RunOptions& opts) {
    return run_accelerated(p, kind, std::move(est), x0, opts);
}

SolverResult run_pdhg(const CompositeProblem& p, double tau, std::vector<double> sigma,
                      const BlockVector& x0, const RunOptions& opts) {
    return run_primal_dual(p, tau, sigma, false, {}, RngStream(0), x0, opts);
}

SolverResult run_spdhg(const CompositeProblem& p, double tau, std::vector<double> sigma,
                       std::vector<double> probs, RngStream rng, const BlockVector& x0,
                       const RunOptions& opts) {
    return run_primal_dual(p, tau, sigma, true, std::move(probs), rng, x0, opts);
}

PdhgSteps pdhg_default_steps(const CompositeProblem& p, double rel) {
    const double nk = std::sqrt(p.norm_k2);
    if (!(nk > 0)) throw param_error("pdhg_default_steps: normK2 must be > 0");
    PdhgSteps s;
    s.tau = rel / nk;
    s.sigma.assign(p.terms.size(), rel / nk);
    return s;
}

PdhgSteps spdhg_default_steps(const CompositeProblem& p, double rel) {
    const double nk = std::sqrt(p.norm_k2);
    const double maxpart = p.max_part_norm();
    if (!(nk > 0) || !(maxpart > 0))
        throw param_error("spdhg_default_steps: operator norms must be > 0");
    PdhgSteps s;
    s.tau = rel / (static_cast<double>(p.terms.size()) * maxpart);
    s.sigma.assign(p.terms.size(), rel / nk);
    return s;
}

} // namespace varsmooth
