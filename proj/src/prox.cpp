#include "varsmooth/prox.hpp"

#include <cmath>
#include <memory>

#include "varsmooth/kernels.hpp"

namespace varsmooth {

namespace {
void require_step(double gamma, const char* who) {
    if (!(gamma > 0.0)) throw param_error(std::string(who) + ": step gamma must be > 0");
}
} // namespace

ProxFunction l1_norm(double lambda, std::size_t dim) {
    if (lambda < 0) throw param_error("l1_norm: lambda must be >= 0");
    ProxFunction g;
    g.eval = [lambda](const BlockVector& x) { return lambda * kernels::sum_abs(x.data()); };
    g.prox = [lambda](const BlockVector& x, double gamma) {
        require_step(gamma, "l1_norm::prox");
        BlockVector out(x.shapes());
        kernels::soft_threshold(x.data(), lambda * gamma, out.data());
        return out;
    };
    g.lipschitz = lambda * std::sqrt(static_cast<double>(dim));
    return g;
}

ProxFunction l2_dist(double alpha, BlockVector b) {
    if (!(alpha > 0)) throw param_error("l2_dist: alpha must be > 0");
    auto center = std::make_shared<BlockVector>(std::move(b));
    ProxFunction g;
    g.eval = [alpha, center](const BlockVector& x) {
        return alpha * norm2(lincomb(1.0, x, -1.0, *center));
    };
    g.prox = [alpha, center](const BlockVector& x, double gamma) {
        require_step(gamma, "l2_dist::prox");
        BlockVector r = lincomb(1.0, x, -1.0, *center);
        const double nr = norm2(r);
        // gamma*alpha >= ||x - b|| collapses onto the center, including the
        // nonsmooth point x = b itself.
        if (nr <= gamma * alpha) return *center;
        return lincomb(1.0, *center, 1.0 - gamma * alpha / nr, r);
    };
    g.lipschitz = alpha;
    return g;
}

ProxFunction zero_function() {
    ProxFunction g;
    g.eval = [](const BlockVector&) { return 0.0; };
    g.prox = [](const BlockVector& x, double gamma) {
        require_step(gamma, "zero_function::prox");
        return x;
    };
    g.lipschitz = 0.0;
    return g;
}

BlockVector conj_prox(const ProxFunction& g, const BlockVector& x, double gamma) {
    require_step(gamma, "conj_prox");
    BlockVector scaled(x.shapes());
    kernels::scale(1.0 / gamma, x.data(), scaled.data());
    BlockVector p = g.prox(scaled, 1.0 / gamma);
    return lincomb(1.0, x, -gamma, p);
}

} // namespace varsmooth
