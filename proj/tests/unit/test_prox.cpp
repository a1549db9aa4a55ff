#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "varsmooth/prox.hpp"

using namespace varsmooth;

namespace {

BlockVector scalar(double v) { return BlockVector::from_values(Shape{1}, {v}); }

} // namespace

TEST_CASE("l1 prox against the 1-D oracle") {
    auto g = l1_norm(1.0, 1);
    auto abs1 = [](double p) { return std::abs(p); };

    // x = 2, gamma = 0.5: minimize |p| + (p-2)^2 / (2*0.5)
    const double o1 = oracles::prox_1d(abs1, 2.0, 0.5);
    CHECK(o1 == doctest::Approx(1.5).epsilon(1e-8));
    CHECK(g.prox(scalar(2.0), 0.5)[0] == doctest::Approx(o1).epsilon(1e-8));

    const double o2 = oracles::prox_1d(abs1, 0.3, 0.5);
    CHECK(o2 == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(g.prox(scalar(0.3), 0.5)[0] == doctest::Approx(0.0));

    CHECK(g.prox(scalar(0.0), 3.0)[0] == 0.0);
}

TEST_CASE("l1 eval and lipschitz") {
    auto g = l1_norm(2.0, 4);
    auto x = BlockVector::from_values(Shape{4}, {1, -2, 0.5, 0});
    CHECK(g.eval(x) == doctest::Approx(7.0));
    CHECK(g.lipschitz.value() == doctest::Approx(2.0 * 2.0)); // 2 * sqrt(4)
    CHECK_THROWS_AS(l1_norm(-1.0, 4), param_error);
}

TEST_CASE("l2_dist prox") {
    auto b0 = BlockVector(Shape{2});
    auto g = l2_dist(1.0, b0);

    auto x = BlockVector::from_values(Shape{2}, {3, 4});
    auto p = g.prox(x, 1.0);
    CHECK(p[0] == doctest::Approx(2.4));
    CHECK(p[1] == doctest::Approx(3.2));

    auto collapsed = g.prox(x, 10.0);
    CHECK(collapsed[0] == 0.0);
    CHECK(collapsed[1] == 0.0);

    // fixed point at the kink
    auto b = BlockVector::from_values(Shape{2}, {1, -1});
    auto g2 = l2_dist(2.0, b);
    auto pb = g2.prox(b, 0.7);
    CHECK(pb[0] == 1.0);
    CHECK(pb[1] == -1.0);

    CHECK(g2.lipschitz.value() == 2.0);
    CHECK_THROWS_AS(l2_dist(0.0, b0), param_error);
}

TEST_CASE("l2_dist prox against the oracle in 1-D") {
    auto b = scalar(0.5);
    auto g = l2_dist(1.5, b);
    auto dist = [](double p) { return 1.5 * std::abs(p - 0.5); };
    for (double x : {2.0, 0.9, 0.5, -3.0}) {
        for (double gamma : {0.1, 1.0, 4.0}) {
            const double want = oracles::prox_1d(dist, x, gamma);
            CHECK(g.prox(scalar(x), gamma)[0] == doctest::Approx(want).epsilon(1e-7));
        }
    }
}

TEST_CASE("zero function") {
    auto g = zero_function();
    RngStream rng(5);
    auto x = gaussian(Shape{6}, 1.0, rng);
    CHECK(g.eval(x) == 0.0);
    auto p = g.prox(x, 1.0);
    CHECK(norm2(lincomb(1.0, p, -1.0, x)) == 0.0);
    auto p2 = g.prox(x, 1e9);
    CHECK(norm2(lincomb(1.0, p2, -1.0, x)) == 0.0);
    CHECK(g.lipschitz.value() == 0.0);
}

TEST_CASE("gamma must be positive") {
    auto g = l1_norm(1.0, 2);
    auto x = BlockVector(Shape{2});
    CHECK_THROWS_AS(g.prox(x, 0.0), param_error);
    CHECK_THROWS_AS(g.prox(x, -1.0), param_error);
    CHECK_THROWS_AS(conj_prox(g, x, 0.0), param_error);
}

TEST_CASE("conj_prox of l1 is the linf projection") {
    auto g = l1_norm(1.0, 2);
    auto x = BlockVector::from_values(Shape{2}, {2.0, -0.5});
    auto p = conj_prox(g, x, 1.0);
    CHECK(p[0] == doctest::Approx(1.0));
    CHECK(p[1] == doctest::Approx(-0.5));
}

TEST_CASE("conj_prox of zero collapses everything") {
    auto g = zero_function();
    RngStream rng(6);
    auto x = gaussian(Shape{5}, 2.0, rng);
    for (double gamma : {0.3, 1.0, 7.0}) CHECK(norm2(conj_prox(g, x, gamma)) <= 1e-14);
}

TEST_CASE("moreau decomposition residual") {
    RngStream rng(7);
    auto b = gaussian(Shape{6}, 1.0, rng);
    ProxFunction funcs[] = {l1_norm(0.8, 6), l2_dist(1.3, b), zero_function()};
    for (const auto& g : funcs) {
        for (int t = 0; t < 50; ++t) {
            auto x = gaussian(Shape{6}, 2.0, rng);
            const double gamma = 0.05 + 3.0 * rng.next_unit();
            // x = prox_{gamma g}(x) + gamma * prox_{g*/gamma}(x/gamma)
            auto part1 = g.prox(x, gamma);
            auto xs = lincomb(1.0 / gamma, x, 0.0, x);
            auto part2 = conj_prox(g, xs, 1.0 / gamma);
            auto sum = lincomb(1.0, part1, gamma, part2);
            CHECK(norm2(lincomb(1.0, x, -1.0, sum)) <= 1e-12 * (1.0 + norm2(x)));
        }
    }
}

TEST_CASE("prox is nonexpansive") {
    RngStream rng(8);
    auto b = gaussian(Shape{5}, 1.0, rng);
    ProxFunction funcs[] = {l1_norm(1.0, 5), l2_dist(2.0, b)};
    for (const auto& g : funcs) {
        for (int t = 0; t < 1000; ++t) {
            auto x = gaussian(Shape{5}, 2.0, rng);
            auto y = gaussian(Shape{5}, 2.0, rng);
            const double gamma = 0.05 + 2.0 * rng.next_unit();
            const double dp = norm2(lincomb(1.0, g.prox(x, gamma), -1.0, g.prox(y, gamma)));
            const double dx = norm2(lincomb(1.0, x, -1.0, y));
            CHECK(dp <= dx * (1.0 + 1e-12) + 1e-15);
        }
    }
}

TEST_CASE("prox optimality against dense candidate grids") {
    RngStream rng(9);
    auto check_beats_grid = [&](const ProxFunction& g, const BlockVector& x, double gamma) {
        auto obj = [&](const BlockVector& p) {
            auto d = lincomb(1.0, p, -1.0, x);
            return g.eval(p) + dot(d, d) / (2.0 * gamma);
        };
        auto p = g.prox(x, gamma);
        const double at_prox = obj(p);
        BlockVector cand(x.shapes());
        if (x.size() == 1) {
            for (int i = 0; i <= 2000; ++i) {
                cand[0] = -5.0 + 10.0 * i / 2000.0;
                CHECK(at_prox <= obj(cand) + 1e-9);
            }
        } else {
            for (int i = 0; i <= 60; ++i)
                for (int j = 0; j <= 60; ++j) {
                    cand[0] = -4.0 + 8.0 * i / 60.0;
                    cand[1] = -4.0 + 8.0 * j / 60.0;
                    CHECK(at_prox <= obj(cand) + 1e-9);
                }
        }
    };

    check_beats_grid(l1_norm(1.0, 1), scalar(1.7), 0.8);
    check_beats_grid(l2_dist(1.0, scalar(0.3)), scalar(-2.0), 1.4);
    auto b2 = BlockVector::from_values(Shape{2}, {0.5, -0.25});
    check_beats_grid(l1_norm(0.6, 2), BlockVector::from_values(Shape{2}, {1.2, -0.4}), 0.9);
    check_beats_grid(l2_dist(2.0, b2), BlockVector::from_values(Shape{2}, {1.0, 2.0}), 0.5);
}

TEST_CASE("conjugate domain bound: envelope gradients stay in B(0, L)") {
    RngStream rng(10);
    auto b = gaussian(Shape{7}, 1.0, rng);
    ProxFunction funcs[] = {l1_norm(1.0, 7), l2_dist(1.7, b)};
    for (const auto& g : funcs) {
        for (int t = 0; t < 300; ++t) {
            auto x = gaussian(Shape{7}, 3.0, rng);
            const double gamma = 0.01 + 5.0 * rng.next_unit();
            auto grad = lincomb(1.0 / gamma, x, -1.0 / gamma, g.prox(x, gamma));
            CHECK(norm2(grad) <= g.lipschitz.value() * (1.0 + 1e-12));
        }
    }
}
