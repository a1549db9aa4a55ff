#pragma once

#include <optional>

#include "varsmooth/solvers.hpp"

namespace varsmooth {

struct BlurSpec {
    std::int64_t size = 9;
    double sigma = 1.5;
    kernels::Boundary boundary = kernels::Boundary::symmetric;
};

struct ImageProblemSpec {
    std::int64_t m = 64;
    std::int64_t n = 64;
    double alpha = 2.0;
    double noise_sigma = 0.1;
    std::optional<BlurSpec> blur;
    std::uint64_t seed = 0;
};

/// Anisotropic TV denoising
///   min alpha ||x - b||_2 + ||D1 x||_1 + ||D2 x||_1
/// as f = alpha ||. - b||_2 with terms (l1, D1), (l1, D2); normK2 = 8.
CompositeProblem build_denoising(BlockVector b_img, double alpha);

/// TV deblurring
///   min alpha ||C x - b||_2 + ||D1 x||_1 + ||D2 x||_1
/// as f = 0 with terms (alpha ||. - b||_2, C), (l1, D1), (l1, D2);
/// normK2 = ||C||^2 + 8 (= 9 for the normalized default kernel).
CompositeProblem build_deblurring(BlockVector b_img, double alpha, const BlurSpec& blur);

/// Piecewise-constant test image in [0, 1] with a handful of seeded
/// rectangles and a disc. Requires m, n >= 8.
BlockVector make_phantom(std::int64_t m, std::int64_t n, RngStream& rng);

/// Apply the blur (when present), then add N(0, noise_sigma^2) noise.
BlockVector degrade(const BlockVector& x, const ImageProblemSpec& spec);

} // namespace varsmooth
