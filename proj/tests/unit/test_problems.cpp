#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "varsmooth/pgm.hpp"
#include "varsmooth/problems.hpp"

using namespace varsmooth;

namespace {
std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}
} // namespace

TEST_CASE("denoising problem assembly") {
    RngStream rng(400);
    auto img = make_phantom(16, 16, rng);
    auto p = build_denoising(img, 2.0);
    CHECK(p.terms.size() == 2);
    CHECK(p.norm_k2 == doctest::Approx(8.0));

    // objective at x = b: the data term vanishes
    auto d1 = d1_rows(16, 16).apply(img);
    auto d2 = d2_cols(16, 16).apply(img);
    double tv = 0.0;
    for (double v : d1.data()) tv += std::abs(v);
    for (double v : d2.data()) tv += std::abs(v);
    CHECK(p.objective(img) == doctest::Approx(tv).epsilon(1e-12));

    // constant data: optimum is b itself with objective 0
    BlockVector flat(Shape{12, 12});
    for (auto& v : flat.data()) v = 0.5;
    auto pc = build_denoising(flat, 2.0);
    CHECK(pc.objective(flat) == 0.0);
    ScheduleKind kind{ScheduleVariant::vast_default, 0.1, pc.norm_k2};
    auto res = run_vast(pc, kind, flat, {.iters = 200, .trace_every = 200});
    CHECK(res.trace.rows.back().objective <= 1e-10);
}

TEST_CASE("deblurring problem assembly") {
    RngStream rng(401);
    auto img = make_phantom(16, 16, rng);
    auto p = build_deblurring(img, 10.0, BlurSpec{});
    CHECK(p.terms.size() == 3);
    CHECK(p.norm_k2 == doctest::Approx(9.0));

    // f = 0 means its prox is the identity
    auto probe = make_phantom(16, 16, rng);
    auto prox = p.f.prox(probe, 3.0);
    CHECK(norm2(lincomb(1.0, prox, -1.0, probe)) == 0.0);
}

TEST_CASE("deblurring with identity kernel reduces to denoising") {
    RngStream rng(402);
    auto img = make_phantom(12, 12, rng);
    auto noisy = degrade(img, {.m = 12, .n = 12, .alpha = 2.0, .noise_sigma = 0.1, .seed = 31});

    auto den = build_denoising(noisy, 2.0);
    auto deb = build_deblurring(noisy, 2.0, BlurSpec{.size = 1, .sigma = 1.0});
    // align the schedules by forcing the same normK2 on both problems
    deb.norm_k2 = den.norm_k2;

    ScheduleKind kind{ScheduleVariant::vast_default, 0.05, den.norm_k2};
    auto a = run_vast(den, kind, noisy, {.iters = 4000, .trace_every = 4000});
    auto b = run_vast(deb, kind, noisy, {.iters = 4000, .trace_every = 4000});
    CHECK(a.trace.rows.back().objective ==
          doctest::Approx(b.trace.rows.back().objective).epsilon(1e-6));
}

TEST_CASE("phantom properties") {
    RngStream r1(7);
    auto a = make_phantom(32, 24, r1);
    for (double v : a.data()) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
    RngStream r2(7);
    auto b = make_phantom(32, 24, r2);
    CHECK(norm2(lincomb(1.0, a, -1.0, b)) == 0.0);

    // piecewise constancy: most forward differences vanish
    auto dr = d1_rows(32, 24).apply(a);
    std::size_t nonzero = 0;
    for (double v : dr.data()) nonzero += (v != 0.0);
    CHECK(nonzero < a.size() / 4);
    CHECK(nonzero > 0);

    CHECK_THROWS_AS(make_phantom(4, 64, r1), param_error);
}

TEST_CASE("degrade") {
    BlockVector zero(Shape{64, 64});
    ImageProblemSpec spec{.m = 64, .n = 64, .alpha = 2.0, .noise_sigma = 0.0, .seed = 0};
    auto same = degrade(zero, spec);
    CHECK(norm2(same) == 0.0);

    spec.noise_sigma = 0.1;
    auto noisy = degrade(zero, spec);
    double var = 0.0;
    for (double v : noisy.data()) var += v * v;
    var /= static_cast<double>(noisy.size());
    CHECK(std::sqrt(var) == doctest::Approx(0.1).epsilon(0.02));

    // blur then noise: degrade(x) - noise == C x
    RngStream rng(403);
    auto img = make_phantom(32, 32, rng);
    ImageProblemSpec bspec{.m = 32, .n = 32, .alpha = 2.0, .noise_sigma = 0.0,
                           .blur = BlurSpec{}, .seed = 5};
    auto blurred = degrade(img, bspec);
    auto expect = conv2d(gaussian_kernel(9, 1.5), 9, 9, 32, 32).apply(img);
    CHECK(norm2(lincomb(1.0, blurred, -1.0, expect)) == 0.0);
}

TEST_CASE("pgm round trip") {
    RngStream rng(404);
    auto img = make_phantom(17, 23, rng);
    auto path = temp_file("varsmooth_test_roundtrip.pgm");
    save_pgm(img, path);
    auto back = load_pgm(path);
    CHECK(back.shape(0).rows() == 17);
    CHECK(back.shape(0).cols() == 23);
    for (std::size_t i = 0; i < img.size(); ++i)
        CHECK(std::abs(back[i] - std::clamp(img[i], 0.0, 1.0)) <= 1.0 / 510.0 + 1e-12);
    std::filesystem::remove(path);
}

TEST_CASE("pgm p2 and p5 load identically") {
    auto p2 = temp_file("varsmooth_test_p2.pgm");
    auto p5 = temp_file("varsmooth_test_p5.pgm");
    {
        std::ofstream o(p2);
        o << "P2\n# a comment\n3 2\n255\n0 128 255\n64 32 16\n";
    }
    {
        std::ofstream o(p5, std::ios::binary);
        o << "P5\n# a comment\n3 2\n255\n";
        const unsigned char px[6] = {0, 128, 255, 64, 32, 16};
        o.write(reinterpret_cast<const char*>(px), 6);
    }
    auto a = load_pgm(p2);
    auto b = load_pgm(p5);
    CHECK(norm2(lincomb(1.0, a, -1.0, b)) == 0.0);
    CHECK(a[2] == doctest::Approx(1.0));
    std::filesystem::remove(p2);
    std::filesystem::remove(p5);
}

TEST_CASE("pgm single pixel at maxval") {
    auto p = temp_file("varsmooth_test_1x1.pgm");
    {
        std::ofstream o(p);
        o << "P2\n1 1\n255\n255\n";
    }
    auto img = load_pgm(p);
    CHECK(img.size() == 1);
    CHECK(img[0] == 1.0);
    std::filesystem::remove(p);
}

TEST_CASE("pgm format errors carry byte offsets") {
    auto p = temp_file("varsmooth_test_bad.pgm");
    {
        std::ofstream o(p);
        o << "P7\n1 1\n255\n255\n";
    }
    CHECK_THROWS_AS(load_pgm(p), format_error);
    {
        std::ofstream o(p, std::ios::binary);
        o << "P5\n4 4\n255\n";
        const unsigned char px[3] = {1, 2, 3}; // truncated payload
        o.write(reinterpret_cast<const char*>(px), 3);
    }
    try {
        load_pgm(p);
        CHECK(false);
    } catch (const format_error& e) {
        CHECK(e.byte_offset() > 0);
    }
    std::filesystem::remove(p);
    CHECK_THROWS_AS(load_pgm(temp_file("varsmooth_does_not_exist.pgm")), format_error);
}
