#pragma once

#include <functional>
#include <optional>

#include "varsmooth/block_vector.hpp"

namespace varsmooth {

/// Proximal-friendly convex function: evaluation (extended-real, +inf
/// allowed), proximal map with step gamma > 0, and the l2-Lipschitz constant
/// when one exists.
struct ProxFunction {
    std::function<double(const BlockVector&)> eval;
    std::function<BlockVector(const BlockVector&, double)> prox;
    std::optional<double> lipschitz;
};

/// lambda * ||.||_1 with componentwise soft-thresholding at lambda*gamma.
/// `dim` is the element count of the vectors this instance is applied to;
/// it fixes the l2-Lipschitz constant lambda*sqrt(dim).
ProxFunction l1_norm(double lambda, std::size_t dim);

/// alpha * ||. - b||_2 (the norm, not its square); prox is the block
/// soft-threshold toward b, with prox(b) = b at the kink. lipschitz = alpha.
ProxFunction l2_dist(double alpha, BlockVector b);

/// Identically zero; prox is the identity for every step.
ProxFunction zero_function();

/// prox_{gamma g*}(x) via the Moreau decomposition
/// prox_{gamma g*}(x) = x - gamma * prox_{g/gamma}(x / gamma).
BlockVector conj_prox(const ProxFunction& g, const BlockVector& x, double gamma);

} // namespace varsmooth
