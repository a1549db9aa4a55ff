#include "varsmooth/problems.hpp"

#include <algorithm>
#include <cmath>

namespace varsmooth {

namespace {
void require_image(const BlockVector& b, const char* who) {
    if (b.num_blocks() != 1 || b.shape(0).ndim() > 2)
        throw shape_error(std::string(who) + ": expected a single image block");
}
} // namespace

CompositeProblem build_denoising(BlockVector b_img, double alpha) {
    require_image(b_img, "build_denoising");
    if (!(alpha > 0)) throw param_error("build_denoising: alpha must be > 0");
    const std::int64_t m = b_img.shape(0).rows();
    const std::int64_t n = b_img.shape(0).cols();
    const std::size_t d = b_img.size();

    std::vector<SmoothedTerm> terms;
    terms.emplace_back(l1_norm(1.0, d), d1_rows(m, n));
    terms.emplace_back(l1_norm(1.0, d), d2_cols(m, n));
    return make_problem(l2_dist(alpha, std::move(b_img)), std::move(terms));
}

CompositeProblem build_deblurring(BlockVector b_img, double alpha, const BlurSpec& blur) {
    require_image(b_img, "build_deblurring");
    if (!(alpha > 0)) throw param_error("build_deblurring: alpha must be > 0");
    const std::int64_t m = b_img.shape(0).rows();
    const std::int64_t n = b_img.shape(0).cols();
    const std::size_t d = b_img.size();

    LinearOperator blur_op =
        conv2d(gaussian_kernel(blur.size, blur.sigma), blur.size, blur.size, m, n,
               blur.boundary);

    std::vector<SmoothedTerm> terms;
    terms.emplace_back(l2_dist(alpha, std::move(b_img)), std::move(blur_op));
    terms.emplace_back(l1_norm(1.0, d), d1_rows(m, n));
    terms.emplace_back(l1_norm(1.0, d), d2_cols(m, n));
    return make_problem(zero_function(), std::move(terms));
}

BlockVector make_phantom(std::int64_t m, std::int64_t n, RngStream& rng) {
    if (m < 8 || n < 8) throw param_error("make_phantom: dims must be >= 8");
    BlockVector img(Shape{m, n});
    auto px = img.data();

    const double background = 0.1 + 0.1 * rng.next_unit();
    for (auto& v : px) v = background;

    auto paint_rect = [&](double frac_i0, double frac_i1, double frac_j0, double frac_j1,
                          double value) {
        const auto i0 = static_cast<std::int64_t>(frac_i0 * static_cast<double>(m));
        const auto i1 = static_cast<std::int64_t>(frac_i1 * static_cast<double>(m));
        const auto j0 = static_cast<std::int64_t>(frac_j0 * static_cast<double>(n));
        const auto j1 = static_cast<std::int64_t>(frac_j1 * static_cast<double>(n));
        for (std::int64_t i = i0; i < i1; ++i)
            for (std::int64_t j = j0; j < j1; ++j) px[i * n + j] = value;
    };

    // Three seeded rectangles plus a disc: at least four constant regions.
    paint_rect(0.10, 0.45, 0.10, 0.40, 0.35 + 0.15 * rng.next_unit());
    paint_rect(0.55, 0.90, 0.15, 0.55, 0.55 + 0.15 * rng.next_unit());
    paint_rect(0.20, 0.60, 0.60, 0.90, 0.75 + 0.15 * rng.next_unit());

    const double ci = (0.30 + 0.40 * rng.next_unit()) * static_cast<double>(m);
    const double cj = (0.30 + 0.40 * rng.next_unit()) * static_cast<double>(n);
    const double radius = 0.15 * static_cast<double>(std::min(m, n));
    const double disc = 0.90 + 0.10 * rng.next_unit();
    for (std::int64_t i = 0; i < m; ++i)
        for (std::int64_t j = 0; j < n; ++j) {
            const double di = static_cast<double>(i) - ci;
            const double dj = static_cast<double>(j) - cj;
            if (di * di + dj * dj <= radius * radius) px[i * n + j] = disc;
        }

    for (auto& v : px) v = std::clamp(v, 0.0, 1.0);
    return img;
}

BlockVector degrade(const BlockVector& x, const ImageProblemSpec& spec) {
    require_image(x, "degrade");
    if (spec.noise_sigma < 0) throw param_error("degrade: noise_sigma must be >= 0");
    BlockVector out = x;
    if (spec.blur) {
        const std::int64_t m = x.shape(0).rows();
        const std::int64_t n = x.shape(0).cols();
        out = conv2d(gaussian_kernel(spec.blur->size, spec.blur->sigma), spec.blur->size,
                     spec.blur->size, m, n, spec.blur->boundary)
                  .apply(x);
    }
    RngStream rng(spec.seed);
    BlockVector noise = gaussian(out.shape(0), spec.noise_sigma, rng);
    return lincomb(1.0, out, 1.0, noise);
}

} // namespace varsmooth
