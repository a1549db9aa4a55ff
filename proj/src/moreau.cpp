#include "varsmooth/moreau.hpp"

namespace varsmooth {

namespace {
void require_mu(double mu) {
    if (!(mu > 0.0)) throw param_error("moreau: smoothing parameter mu must be > 0");
}
} // namespace

SmoothedTerm::SmoothedTerm(ProxFunction g_, LinearOperator op_)
    : g(std::move(g_)), op(std::move(op_)), lipschitz(0.0) {
    if (!g.lipschitz) throw param_error("SmoothedTerm: g needs a Lipschitz constant");
    lipschitz = *g.lipschitz;
}

SmoothedTerm::SmoothedTerm(ProxFunction g_, LinearOperator op_, double lipschitz_)
    : g(std::move(g_)), op(std::move(op_)), lipschitz(lipschitz_) {
    if (lipschitz < 0) throw param_error("SmoothedTerm: Lipschitz constant must be >= 0");
}

double envelope_value(const ProxFunction& g, double mu, const BlockVector& x) {
    require_mu(mu);
    BlockVector p = g.prox(x, mu);
    BlockVector r = lincomb(1.0, x, -1.0, p);
    return g.eval(p) + dot(r, r) / (2.0 * mu);
}

BlockVector envelope_grad(const ProxFunction& g, double mu, const BlockVector& x) {
    require_mu(mu);
    BlockVector p = g.prox(x, mu);
    return lincomb(1.0 / mu, x, -1.0 / mu, p);
}

double envelope_dmu(const ProxFunction& g, double mu, const BlockVector& x) {
    BlockVector grad = envelope_grad(g, mu, x);
    return -0.5 * dot(grad, grad);
}

BlockVector composite_grad(const SmoothedTerm& term, double mu, const BlockVector& x) {
    require_mu(mu);
    BlockVector z = term.op.apply(x);
    return term.op.adjoint(envelope_grad(term.g, mu, z));
}

double smoothed_objective(const ProxFunction& f, std::span<const SmoothedTerm> terms,
                          double mu, const BlockVector& x) {
    require_mu(mu);
    double v = f.eval(x);
    for (const auto& t : terms) v += envelope_value(t.g, mu, t.op.apply(x));
    return v;
}

} // namespace varsmooth
