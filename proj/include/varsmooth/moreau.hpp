#pragma once

#include <span>

#include "varsmooth/linops.hpp"
#include "varsmooth/prox.hpp"

namespace varsmooth {

/// One smoothed summand g(K.) of a composite objective.
struct SmoothedTerm {
    ProxFunction g;
    LinearOperator op;
    double lipschitz; // L_g of g

    SmoothedTerm(ProxFunction g_, LinearOperator op_);
    SmoothedTerm(ProxFunction g_, LinearOperator op_, double lipschitz_);
};

/// Moreau envelope value via the infimal-convolution form
/// g(p) + ||x - p||^2 / (2 mu) at p = prox_{mu g}(x). Never exceeds g(x).
double envelope_value(const ProxFunction& g, double mu, const BlockVector& x);

/// Envelope gradient (x - prox_{mu g}(x)) / mu; mu^{-1}-Lipschitz and
/// contained in the ball of radius L_g.
BlockVector envelope_grad(const ProxFunction& g, double mu, const BlockVector& x);

/// Derivative of mu -> envelope value: -||grad||^2 / 2, always <= 0.
double envelope_dmu(const ProxFunction& g, double mu, const BlockVector& x);

/// Gradient of the smoothed composition: K* grad_envelope(g, mu, K x).
BlockVector composite_grad(const SmoothedTerm& term, double mu, const BlockVector& x);

/// f(x) + sum_i envelope_value(g_i, mu, K_i x).
double smoothed_objective(const ProxFunction& f, std::span<const SmoothedTerm> terms,
                          double mu, const BlockVector& x);

} // namespace varsmooth
