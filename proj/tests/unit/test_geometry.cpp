#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geolab/error.hpp"
#include "geolab/gauge.hpp"
#include "geolab/metric.hpp"
#include "geolab/warp.hpp"

#include <cmath>
#include <vector>

using namespace geolab;

TEST_CASE("example manifold Christoffels and |Rm|^2 at x=2") {
    WarpedMetric m(warps::example_cap());
    const auto b = curvature_bundle(m, 2.0);
    CHECK(b.christoffel.g122 == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(b.christoffel.g212 == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(b.christoffel.g111 == 0.0);
    CHECK(b.christoffel.g222 == 0.0);
    CHECK(b.rm_norm_sq == doctest::Approx(0.5).epsilon(1e-12));
    // Gamma^1_22 = 1/x^3 and |Rm|^2 = 8/x^4 across the outer region.
    for (double x : {1.5, 2.0, 5.0, -3.0}) {
        const auto bx = curvature_bundle(m, x);
        CHECK(bx.christoffel.g122 ==
              doctest::Approx(1.0 / (x * x * x)).epsilon(1e-12));
        CHECK(bx.christoffel.g212 == doctest::Approx(-1.0 / x).epsilon(1e-12));
        CHECK(bx.rm_norm_sq ==
              doctest::Approx(8.0 / std::pow(x, 4)).epsilon(1e-12));
    }
}

TEST_CASE("flat cylinder is flat") {
    WarpedMetric m(warps::flat());
    const auto b = curvature_bundle(m, 0.37);
    CHECK(b.christoffel.g122 == 0.0);
    CHECK(b.christoffel.g212 == 0.0);
    CHECK(b.gauss == 0.0);
    CHECK(b.rm_norm_sq == 0.0);
}

TEST_CASE("hyperbolic cylinder has K = -1") {
    WarpedMetric m(warps::hyperbolic());
    for (double x : {0.0, 0.7, -1.3, 2.0}) {
        CHECK(curvature_bundle(m, x).gauss == doctest::Approx(-1.0).epsilon(1e-12));
    }
}

TEST_CASE("Ricci = K g componentwise") {
    for (const auto& w :
         {warps::example_cap(), warps::hyperbolic(), warps::flat()}) {
        WarpedMetric m(w);
        for (double x = -4.0; x <= 4.0; x += 0.37) {
            const auto b = curvature_bundle(m, x);
            CHECK(std::abs(b.ricci11 - b.gauss * m.g11(x)) < 1e-9);
            CHECK(std::abs(b.ricci22 - b.gauss * m.g22(x)) < 1e-9);
        }
    }
}

TEST_CASE("rm_norm_sq is sign-convention independent") {
    WarpedMetric m(warps::example_cap());
    const auto b = curvature_bundle(m, 1.7);
    const double flipped = -b.r1212;
    const double rm = 2.0 * std::pow(m.inv_g11(1.7) * m.inv_g22(1.7) * flipped, 2);
    CHECK(rm == doctest::Approx(b.rm_norm_sq).epsilon(1e-15));
}

TEST_CASE("finite-difference warp reproduces closed-form curvature at O(step^2)") {
    auto closed = warps::hyperbolic();
    WarpedMetric exact(closed);

    auto fd_err = [&](double step) {
        auto approx = warps::from_function(closed.eval, "hyperbolic-fd", step);
        WarpedMetric m(approx);
        double err = 0.0;
        for (double x : {0.3, 0.9, 1.4}) {
            err = std::max(err, std::abs(curvature_bundle(m, x).gauss -
                                         curvature_bundle(exact, x).gauss));
            err = std::max(err, std::abs(m.christoffels(x).g212 -
                                         exact.christoffels(x).g212));
        }
        return err;
    };
    // from_function uses 4th-order stencils; halving the step must shrink
    // the error by well over the O(step^2) factor the contract asks for.
    const double e1 = fd_err(2e-2);
    const double e2 = fd_err(1e-2);
    CHECK(e2 * 4.0 <= e1 * 1.5);
    CHECK(e1 < 1e-5);
}

TEST_CASE("non-positive warp raises a domain error") {
    auto bad = warps::from_function([](double x) { return x; }, "bad");
    WarpedMetric m(bad);
    CHECK_THROWS_AS(curvature_bundle(m, -1.0), DomainError);
}

TEST_CASE("metric equivalence on identity and homothety") {
    WarpedMetric g0(warps::hyperbolic());
    std::vector<Point> pts;
    for (double x = -1.0; x <= 1.0; x += 0.25) pts.push_back({x, 0.3 * x});

    const auto id = metric_equivalence(g0.components(), g0.components(), pts);
    CHECK(id.c1 == doctest::Approx(1.0));
    CHECK(id.c2 == doctest::Approx(1.0));

    auto scaled = [&g0](Point p) {
        auto c = g0.components()(p);
        return std::array<double, 2>{3.0 * c[0], 3.0 * c[1]};
    };
    const auto hom = metric_equivalence(g0.components(), scaled, pts);
    CHECK(hom.c1 == doctest::Approx(3.0));
    CHECK(hom.c2 == doctest::Approx(3.0));

    CHECK_THROWS_AS(
        metric_equivalence(g0.components(), scaled, std::vector<Point>{}),
        ArgumentError);
}

TEST_CASE("gauge transform: flat and constant warps") {
    WarpedMetric flat(warps::flat());
    auto g = gauge_transform(flat, -2.0, 2.0, 257);
    CHECK(g.w_of_x(1.5) == doctest::Approx(1.5).epsilon(1e-10));
    CHECK(g.u_of_w(0.7) == doctest::Approx(0.0).epsilon(1e-10));

    WarpedMetric four(warps::constant(4.0));
    auto g4 = gauge_transform(four, -2.0, 2.0, 257);
    CHECK(g4.w_of_x(1.0) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(g4.u_of_w(0.3) == doctest::Approx(std::log(2.0)).epsilon(1e-10));
}

TEST_CASE("gauge transform: x^-2 on [1,3] matches the antiderivative") {
    WarpedMetric m(warps::example_cap());
    // Pin w(1) = 1/2 so w = x^2/2 and u(w) = -log(2w)/2.
    auto g = gauge_transform(m, 1.0, 3.0, 2049, 1.0 + 1e-12, 0.5);
    for (double x = 1.1; x <= 2.9; x += 0.2) {
        CHECK(g.w_of_x(x) == doctest::Approx(0.5 * x * x).epsilon(1e-8));
    }
    for (double w = 0.6; w <= 4.4; w += 0.3) {
        CHECK(g.u_of_w(w) ==
              doctest::Approx(-0.5 * std::log(2.0 * w)).epsilon(1e-7));
    }
}

TEST_CASE("gauge round trip reproduces the warp on [-10,10]") {
    WarpedMetric m(warps::example_cap());
    auto g = gauge_transform(m, -10.0, 10.0, 8193);
    auto back = warp_from_gauge(g);
    double err = 0.0;
    for (double x = -9.9; x <= 9.9; x += 0.173) {
        err = std::max(err, std::abs(back.eval(x) - m.fiber(x)));
    }
    CHECK(err < 1e-6);
}

TEST_CASE("inverse gauge direction rejects non-monotone maps") {
    CHECK_THROWS_AS(gauge_transform_inverse(
                        [](double w) { return std::log(-1.0 + 0.0 * w); }, 0.0,
                        1.0, 65),
                    GaugeError);
}

TEST_CASE("diagonal component curvature agrees with warped closed form") {
    WarpedMetric m(warps::hyperbolic());
    for (double x : {0.0, 0.5, 1.1}) {
        const double k =
            gauss_curvature_of_components(m.components(), {x, 0.2}, 1e-2);
        CHECK(k == doctest::Approx(curvature_bundle(m, x).gauss).epsilon(1e-6));
    }
}
