#include "doctest.h"

#include <cmath>

#include "varsmooth/linops.hpp"

using namespace varsmooth;

namespace {

// |<Kx,y> - <x,K*y>| <= tol * (1 + ||Kx|| ||y||) over random pairs
void check_adjoint(const LinearOperator& op, RngStream& rng, int pairs = 100,
                   double tol = 1e-12) {
    for (int t = 0; t < pairs; ++t) {
        BlockVector x(op.domain);
        BlockVector y(op.codomain);
        fill_gaussian(x, 1.0, rng);
        fill_gaussian(y, 1.0, rng);
        BlockVector kx = op.apply(x);
        BlockVector kty = op.adjoint(y);
        const double lhs = dot(kx, y);
        const double rhs = dot(x, kty);
        CHECK(std::abs(lhs - rhs) <= tol * (1.0 + norm2(kx) * norm2(y)));
    }
}

void check_linearity(const LinearOperator& op, RngStream& rng) {
    BlockVector x(op.domain);
    BlockVector y(op.domain);
    fill_gaussian(x, 1.0, rng);
    fill_gaussian(y, 1.0, rng);
    const double a = 1.7, b = -0.6;
    BlockVector lhs = op.apply(lincomb(a, x, b, y));
    BlockVector rhs = lincomb(a, op.apply(x), b, op.apply(y));
    CHECK(norm2(lincomb(1.0, lhs, -1.0, rhs)) <= 1e-12 * (1.0 + norm2(lhs)));
}

} // namespace

TEST_CASE("d1_rows on a 2x2 image") {
    auto u = BlockVector::from_values(Shape{2, 2}, {1, 2, 3, 4});
    auto out = d1_rows(2, 2).apply(u);
    CHECK(out[0] == 2.0);
    CHECK(out[1] == 2.0);
    CHECK(out[2] == 0.0);
    CHECK(out[3] == 0.0);
}

TEST_CASE("d2_cols on a 2x2 image") {
    auto u = BlockVector::from_values(Shape{2, 2}, {1, 2, 3, 4});
    auto out = d2_cols(2, 2).apply(u);
    CHECK(out[0] == 1.0);
    CHECK(out[1] == 0.0);
    CHECK(out[2] == 1.0);
    CHECK(out[3] == 0.0);
}

TEST_CASE("difference operators kill constants") {
    BlockVector c(Shape{6, 9});
    for (auto& v : c.data()) v = 3.25;
    CHECK(norm2(d1_rows(6, 9).apply(c)) == 0.0);
    CHECK(norm2(d2_cols(6, 9).apply(c)) == 0.0);
}

TEST_CASE("adjoint identities") {
    RngStream rng(1001);
    check_adjoint(d1_rows(5, 4), rng);
    check_adjoint(d2_cols(5, 4), rng);
    check_adjoint(stack({d1_rows(7, 3), d2_cols(7, 3)}), rng);
    check_adjoint(identity(Shape{12}), rng);
    check_adjoint(diagonal(BlockVector::from_values(Shape{2}, {3, 1})), rng);
}

TEST_CASE("conv2d adjoint, both boundaries") {
    RngStream rng(1002);
    auto kernel = gaussian_kernel(3, 0.8);
    // also an asymmetric kernel to exercise the reflected preimages
    std::vector<double> skew = {0.5, 0.2, 0.05, 0.1, 0.05, 0.02, 0.05, 0.02, 0.01};
    for (auto boundary : {kernels::Boundary::zero, kernels::Boundary::symmetric}) {
        check_adjoint(conv2d(kernel, 3, 3, 8, 8, boundary), rng);
        check_adjoint(conv2d(skew, 3, 3, 8, 8, boundary), rng);
    }
}

TEST_CASE("conv2d identity kernel") {
    RngStream rng(1003);
    auto op = conv2d({1.0}, 1, 1, 6, 7, kernels::Boundary::zero);
    BlockVector x(op.domain);
    fill_gaussian(x, 1.0, rng);
    CHECK(norm2(lincomb(1.0, op.apply(x), -1.0, x)) == 0.0);
}

TEST_CASE("normalized kernel preserves constants under reflection") {
    auto op = conv2d(gaussian_kernel(9, 1.5), 9, 9, 16, 16, kernels::Boundary::symmetric);
    BlockVector c(Shape{16, 16});
    for (auto& v : c.data()) v = 0.7;
    auto out = op.apply(c);
    for (double v : out.data()) CHECK(v == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(op.norm_bound.value() == 1.0);
}

TEST_CASE("stack norm bound and behavior") {
    auto s = stack({d1_rows(4, 4), d2_cols(4, 4)});
    CHECK(s.norm_bound.value() == doctest::Approx(std::sqrt(8.0)));

    auto one = stack({identity(Shape{5})});
    RngStream rng(1004);
    BlockVector x(one.domain);
    fill_gaussian(x, 1.0, rng);
    CHECK(norm2(lincomb(1.0, one.apply(x), -1.0, x)) == 0.0);

    CHECK_THROWS_AS(stack({d1_rows(3, 3), d1_rows(4, 4)}), shape_error);
}

TEST_CASE("linearity") {
    RngStream rng(1005);
    check_linearity(d1_rows(6, 5), rng);
    check_linearity(d2_cols(6, 5), rng);
    check_linearity(conv2d(gaussian_kernel(3, 1.0), 3, 3, 6, 5), rng);
    check_linearity(stack({d1_rows(6, 5), d2_cols(6, 5)}), rng);
}

TEST_CASE("estimate_norm") {
    RngStream rng(1006);
    CHECK(estimate_norm(identity(Shape{10}), 50, 1e-10, rng) == doctest::Approx(1.0).epsilon(1e-6));

    auto diag = diagonal(BlockVector::from_values(Shape{2}, {3, 1}));
    CHECK(estimate_norm(diag, 500, 1e-12, rng) == doctest::Approx(3.0).epsilon(1e-6));

    auto zero = diagonal(BlockVector(Shape{4}));
    CHECK(estimate_norm(zero, 10, 1e-6, rng) == 0.0);

    // estimates stay below the recorded bounds
    for (auto op : {d1_rows(32, 32), d2_cols(32, 32)}) {
        const double est = estimate_norm(op, 300, 1e-12, rng);
        CHECK(est <= op.norm_bound.value() + 1e-9);
        CHECK(est > 1.8); // the true norm tends to 2
    }
    auto blur = conv2d(gaussian_kernel(9, 1.5), 9, 9, 32, 32);
    CHECK(estimate_norm(blur, 300, 1e-12, rng) <= 1.0 + 1e-9);
}

TEST_CASE("grad-stack norm estimate at 256x256") {
    RngStream rng(1007);
    auto s = stack({d1_rows(256, 256), d2_cols(256, 256)});
    const double est = estimate_norm(s, 200, 1e-9, rng);
    CHECK(est >= 2.7);
    CHECK(est <= std::sqrt(8.0) + 1e-9);
}

TEST_CASE("conv2d parameter validation") {
    CHECK_THROWS_AS(conv2d({1, 2}, 2, 1, 8, 8), param_error);
    CHECK_THROWS_AS(conv2d({1, 2, 3, 4}, 2, 2, 8, 8), param_error);
    std::vector<double> nan_kernel = {std::nan("")};
    CHECK_THROWS_AS(conv2d(nan_kernel, 1, 1, 8, 8), param_error);
}
