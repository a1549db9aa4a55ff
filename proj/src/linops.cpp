#include "varsmooth/linops.hpp"

#include <cmath>
#include <memory>
#include <utility>

namespace varsmooth {

namespace {

void require_structure(const BlockVector& v, const std::vector<Shape>& shapes, const char* who) {
    if (v.shapes() != shapes) throw shape_error(std::string(who) + ": block structure mismatch");
}

} // namespace

BlockVector LinearOperator::apply(const BlockVector& x) const {
    BlockVector out(codomain);
    apply_into(x, out);
    return out;
}

BlockVector LinearOperator::adjoint(const BlockVector& y) const {
    BlockVector out(domain);
    adjoint_into(y, out);
    return out;
}

void LinearOperator::apply_into(const BlockVector& x, BlockVector& out) const {
    require_structure(x, domain, "LinearOperator::apply");
    require_structure(out, codomain, "LinearOperator::apply");
    forward(x, out);
}

void LinearOperator::adjoint_into(const BlockVector& y, BlockVector& out) const {
    require_structure(y, codomain, "LinearOperator::adjoint");
    require_structure(out, domain, "LinearOperator::adjoint");
    transpose(y, out);
}

LinearOperator identity(Shape shape) {
    auto copy = [](const BlockVector& x, BlockVector& out) {
        kernels::scale(1.0, x.data(), out.data());
    };
    LinearOperator op;
    op.domain = {shape};
    op.codomain = {std::move(shape)};
    op.norm_bound = 1.0;
    op.forward = copy;
    op.transpose = copy;
    return op;
}

LinearOperator diagonal(BlockVector d) {
    double maxabs = 0.0;
    for (double v : d.data()) maxabs = std::max(maxabs, std::abs(v));
    auto diag = std::make_shared<BlockVector>(std::move(d));
    auto mul = [diag](const BlockVector& x, BlockVector& out) {
        auto xi = x.data();
        auto di = diag->data();
        auto oi = out.data();
        for (std::size_t i = 0; i < xi.size(); ++i) oi[i] = di[i] * xi[i];
    };
    LinearOperator op;
    op.domain = diag->shapes();
    op.codomain = diag->shapes();
    op.norm_bound = maxabs;
    op.forward = mul;
    op.transpose = mul;
    return op;
}

LinearOperator d1_rows(std::int64_t m, std::int64_t n) {
    if (m < 1 || n < 1) throw param_error("d1_rows: dims must be >= 1");
    Shape img{m, n};
    LinearOperator op;
    op.domain = {img};
    op.codomain = {img};
    op.norm_bound = 2.0;
    op.forward = [m, n](const BlockVector& x, BlockVector& out) {
        kernels::diff_rows(x.data(), out.data(), m, n);
    };
    op.transpose = [m, n](const BlockVector& y, BlockVector& out) {
        kernels::diff_rows_adjoint(y.data(), out.data(), m, n);
    };
    return op;
}

LinearOperator d2_cols(std::int64_t m, std::int64_t n) {
    if (m < 1 || n < 1) throw param_error("d2_cols: dims must be >= 1");
    Shape img{m, n};
    LinearOperator op;
    op.domain = {img};
    op.codomain = {img};
    op.norm_bound = 2.0;
    op.forward = [m, n](const BlockVector& x, BlockVector& out) {
        kernels::diff_cols(x.data(), out.data(), m, n);
    };
    op.transpose = [m, n](const BlockVector& y, BlockVector& out) {
        kernels::diff_cols_adjoint(y.data(), out.data(), m, n);
    };
    return op;
}

LinearOperator conv2d(std::vector<double> kernel, std::int64_t km, std::int64_t kn,
                      std::int64_t m, std::int64_t n, kernels::Boundary boundary) {
    if (km < 1 || kn < 1 || km % 2 == 0 || kn % 2 == 0)
        throw param_error("conv2d: kernel dims must be odd and >= 1");
    if (kernel.size() != static_cast<std::size_t>(km * kn))
        throw param_error("conv2d: kernel size does not match its dims");
    if (km / 2 >= m || kn / 2 >= n)
        throw param_error("conv2d: kernel radius must be smaller than the image");
    for (double v : kernel)
        if (!std::isfinite(v)) throw param_error("conv2d: kernel entries must be finite");

    bool nonneg = true;
    bool symmetric = true;
    double sum = 0.0;
    for (std::int64_t i = 0; i < km * kn; ++i) {
        sum += kernel[static_cast<std::size_t>(i)];
        nonneg = nonneg && kernel[static_cast<std::size_t>(i)] >= 0.0;
        symmetric = symmetric &&
                    kernel[static_cast<std::size_t>(i)] ==
                        kernel[static_cast<std::size_t>(km * kn - 1 - i)];
    }

    auto ker = std::make_shared<std::vector<double>>(std::move(kernel));
    LinearOperator op;
    Shape img{m, n};
    op.domain = {img};
    op.codomain = {img};
    // ||C|| <= sqrt(max row sum * max col sum); both are 1 for a normalized
    // nonnegative kernel except under reflection with an asymmetric kernel,
    // where boundary columns can exceed 1.
    if (nonneg && std::abs(sum - 1.0) < 1e-12 &&
        (boundary == kernels::Boundary::zero || symmetric))
        op.norm_bound = 1.0;
    op.forward = [ker, m, n, km, kn, boundary](const BlockVector& x, BlockVector& out) {
        kernels::conv2d(x.data(), out.data(), m, n, *ker, km, kn, boundary, false);
    };
    op.transpose = [ker, m, n, km, kn, boundary](const BlockVector& y, BlockVector& out) {
        kernels::conv2d(y.data(), out.data(), m, n, *ker, km, kn, boundary, true);
    };
    return op;
}

LinearOperator stack(std::vector<LinearOperator> parts) {
    if (parts.empty()) throw param_error("stack: needs at least one part");
    for (const auto& p : parts)
        if (p.domain != parts.front().domain) throw shape_error("stack: domain mismatch");

    LinearOperator op;
    op.domain = parts.front().domain;
    double sq = 0.0;
    bool bounded = true;
    for (const auto& p : parts) {
        if (p.codomain.size() != 1)
            throw shape_error("stack: parts must have single-block codomains");
        op.codomain.push_back(p.codomain.front());
        if (p.norm_bound)
            sq += *p.norm_bound * *p.norm_bound;
        else
            bounded = false;
    }
    if (bounded) op.norm_bound = std::sqrt(sq);

    auto shared = std::make_shared<std::vector<LinearOperator>>(std::move(parts));
    op.forward = [shared](const BlockVector& x, BlockVector& out) {
        for (std::size_t i = 0; i < shared->size(); ++i) {
            BlockVector yi = (*shared)[i].apply(x);
            auto src = yi.data();
            auto dst = out.block(i);
            std::copy(src.begin(), src.end(), dst.begin());
        }
    };
    auto domain = op.domain;
    op.transpose = [shared, domain](const BlockVector& y, BlockVector& out) {
        out.set_zero();
        BlockVector acc(domain);
        for (std::size_t i = 0; i < shared->size(); ++i) {
            BlockVector yi((*shared)[i].codomain);
            auto src = y.block(i);
            auto dst = yi.data();
            std::copy(src.begin(), src.end(), dst.begin());
            (*shared)[i].adjoint_into(yi, acc);
            kernels::axpby(1.0, out.data(), 1.0, acc.data(), out.data());
        }
    };
    return op;
}

double estimate_norm(const LinearOperator& op, int iters, double tol, RngStream& rng) {
    if (iters < 1) throw param_error("estimate_norm: iters must be >= 1");
    if (tol <= 0) throw param_error("estimate_norm: tol must be > 0");

    BlockVector x(op.domain);
    fill_gaussian(x, 1.0, rng);
    const double nx0 = norm2(x);
    if (nx0 == 0.0) return 0.0;
    kernels::scale(1.0 / nx0, x.data(), x.data());

    BlockVector w(op.codomain);
    BlockVector v(op.domain);
    double est = 0.0;
    for (int it = 0; it < iters; ++it) {
        op.apply_into(x, w);
        const double nw = norm2(w);
        if (nw == 0.0) return 0.0;
        op.adjoint_into(w, v);
        const double nv = norm2(v);
        if (nv == 0.0) return nw;
        kernels::scale(1.0 / nv, v.data(), x.data());
        const double prev = est;
        est = nw; // ||K x|| for unit x converges to the operator norm
        if (it > 0 && std::abs(est - prev) <= tol * std::max(est, 1e-300)) break;
    }
    return est;
}

std::vector<double> gaussian_kernel(std::int64_t size, double sigma) {
    if (size < 1 || size % 2 == 0) throw param_error("gaussian_kernel: size must be odd");
    if (sigma <= 0) throw param_error("gaussian_kernel: sigma must be > 0");
    const std::int64_t r = size / 2;
    std::vector<double> k(static_cast<std::size_t>(size * size));
    double sum = 0.0;
    for (std::int64_t i = -r; i <= r; ++i)
        for (std::int64_t j = -r; j <= r; ++j) {
            const double v = std::exp(-0.5 * (double(i * i + j * j)) / (sigma * sigma));
            k[static_cast<std::size_t>((i + r) * size + (j + r))] = v;
            sum += v;
        }
    for (auto& v : k) v /= sum;
    return k;
}

} // namespace varsmooth
