#pragma once

// Test-only reference computations, deliberately independent of the library
// code paths they are used to check: 1-D proximal maps and envelope values
// by direct minimization, gradients by central differences, and a dense
// grid-refinement global minimizer for tiny TV problems.

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "varsmooth/block_vector.hpp"

namespace oracles {

using Scalar1d = std::function<double(double)>;

/// min_p g(p) + (p - x)^2 / (2 gamma) by coarse grid + iterated refinement.
/// Returns the minimizing p.
inline double prox_1d(const Scalar1d& g, double x, double gamma,
                      double half_width = 0.0, int rounds = 60) {
    double lo = x - (half_width > 0 ? half_width : 10.0 * (1.0 + std::abs(x)));
    double hi = x + (half_width > 0 ? half_width : 10.0 * (1.0 + std::abs(x)));
    auto obj = [&](double p) { return g(p) + (p - x) * (p - x) / (2.0 * gamma); };
    double best = x;
    for (int r = 0; r < rounds; ++r) {
        const int npts = 41;
        double best_val = std::numeric_limits<double>::infinity();
        double arg = lo;
        for (int i = 0; i < npts; ++i) {
            const double p = lo + (hi - lo) * i / (npts - 1);
            const double v = obj(p);
            if (v < best_val) {
                best_val = v;
                arg = p;
            }
        }
        const double step = (hi - lo) / (npts - 1);
        lo = arg - step;
        hi = arg + step;
        best = arg;
    }
    return best;
}

/// min_p g(p) + (x - p)^2 / (2 mu): the envelope value, independent of any
/// prox formula.
inline double envelope_1d(const Scalar1d& g, double mu, double x) {
    const double p = prox_1d(g, x, mu);
    return g(p) + (x - p) * (x - p) / (2.0 * mu);
}

/// Central difference d/dt f(t).
inline double central_diff(const std::function<double(double)>& f, double t, double h) {
    return (f(t + h) - f(t - h)) / (2.0 * h);
}

/// Coordinate-wise central differences of F at x.
inline varsmooth::BlockVector grad_central_diff(
    const std::function<double(const varsmooth::BlockVector&)>& F,
    const varsmooth::BlockVector& x, double h) {
    varsmooth::BlockVector g(x.shapes());
    varsmooth::BlockVector xp = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double xi = x[i];
        xp[i] = xi + h;
        const double fp = F(xp);
        xp[i] = xi - h;
        const double fm = F(xp);
        xp[i] = xi;
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

/// Global minimum of F over the box [lo, hi]^dim by dense grid refinement
/// followed by cyclic coordinate polish. Suitable for dim <= 4.
struct BoxMinimum {
    std::vector<double> arg;
    double value;
};

inline BoxMinimum grid_refine_min(const std::function<double(const std::vector<double>&)>& F,
                                  std::size_t dim, double lo, double hi, int pts_per_dim = 13,
                                  int rounds = 12) {
    std::vector<double> center(dim, 0.5 * (lo + hi));
    double half = 0.5 * (hi - lo);
    std::vector<double> best = center;
    double best_val = F(center);

    std::vector<double> probe(dim);
    for (int r = 0; r < rounds; ++r) {
        std::vector<std::size_t> idx(dim, 0);
        const std::size_t total = [&] {
            std::size_t t = 1;
            for (std::size_t d = 0; d < dim; ++d) t *= static_cast<std::size_t>(pts_per_dim);
            return t;
        }();
        for (std::size_t flat = 0; flat < total; ++flat) {
            std::size_t rem = flat;
            for (std::size_t d = 0; d < dim; ++d) {
                idx[d] = rem % pts_per_dim;
                rem /= pts_per_dim;
                probe[d] = center[d] - half +
                           2.0 * half * static_cast<double>(idx[d]) / (pts_per_dim - 1);
            }
            const double v = F(probe);
            if (v < best_val) {
                best_val = v;
                best = probe;
            }
        }
        center = best;
        half = 2.0 * half / (pts_per_dim - 1); // keep one grid cell of slack
    }

    // Cyclic coordinate polish with shrinking steps.
    double step = half;
    for (int r = 0; r < 200 && step > 1e-14; ++r) {
        bool improved = false;
        for (std::size_t d = 0; d < dim; ++d) {
            for (double s : {-step, step}) {
                probe = best;
                probe[d] += s;
                const double v = F(probe);
                if (v < best_val) {
                    best_val = v;
                    best = probe;
                    improved = true;
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    return {best, best_val};
}

} // namespace oracles
