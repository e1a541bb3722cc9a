#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geolab/distance.hpp"
#include "geolab/error.hpp"
#include "geolab/geodesic.hpp"
#include "geolab/warp.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace geolab;
constexpr double kPi = std::numbers::pi;

TEST_CASE("flat cylinder: straight line and fiber wrap") {
    WarpedMetric m(warps::flat());
    auto g = shoot_geodesic(m, {0.0, 0.0}, 0.0, 3.0);
    CHECK(g.end.x == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(g.end.theta == doctest::Approx(0.0).epsilon(1e-10));

    auto h = shoot_geodesic(m, {0.0, 0.0}, kPi / 2.0, kPi);
    CHECK(h.end.x == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(h.end.theta == doctest::Approx(kPi).epsilon(1e-10));
}

TEST_CASE("hyperbolic cylinder: Clairaut constant is preserved") {
    WarpedMetric m(warps::hyperbolic());
    auto g = shoot_geodesic(m, {0.0, 0.0}, kPi / 2.0, 0.5);
    CHECK(g.clairaut == doctest::Approx(1.0).epsilon(1e-12));
    auto drift = geodesic_drift(ProfileMetric::from_warped(m), g);
    CHECK(drift.clairaut < 1e-7);
    CHECK(drift.speed < 1e-8);
}

TEST_CASE("step halving shrinks conservation drift by >= 8x") {
    WarpedMetric m(warps::example_cap());
    const auto pm = ProfileMetric::from_warped(m);

    GeodesicOptions coarse;
    coarse.step = 2e-2;
    coarse.sample_stride = 1;
    GeodesicOptions fine = coarse;
    fine.step = 1e-2;

    auto gc = shoot_geodesic(pm, {1.5, 0.0}, 1.1, 4.0, coarse);
    auto gf = shoot_geodesic(pm, {1.5, 0.0}, 1.1, 4.0, fine);
    const auto dc = geodesic_drift(pm, gc);
    const auto df = geodesic_drift(pm, gf);
    CHECK(dc.speed >= 8.0 * df.speed);
    CHECK(dc.clairaut >= 8.0 * df.clairaut);
}

TEST_CASE("flat distances: axial, antipodal fiber, unrolled diagonal") {
    WarpedMetric m(warps::flat());

    auto d1 = distance(m, {0.0, 0.0}, {3.0, 0.0});
    CHECK(d1.value == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(d1.winding == 0);

    auto d2 = distance(m, {0.0, 0.0}, {0.0, kPi});
    CHECK(d2.value == doctest::Approx(kPi).epsilon(1e-8));
    CHECK(d2.near_cut);
    CHECK(d2.minimizer_count >= 2);

    auto d3 = distance(m, {0.0, 0.0}, {3.0, kPi});
    CHECK(d3.value == doctest::Approx(std::sqrt(9.0 + kPi * kPi)).epsilon(1e-8));
}

TEST_CASE("coincident points have zero distance") {
    WarpedMetric m(warps::example_cap());
    auto d = distance(m, {2.0, 1.0}, {2.0, 1.0 + 2.0 * kPi});
    CHECK(d.value == 0.0);
}

TEST_CASE("distance is symmetric on random pairs (flat and example)") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ux(-5.0, 5.0);
    std::uniform_real_distribution<double> uth(0.0, 2.0 * kPi);

    for (const auto& w : {warps::flat(), warps::example_cap()}) {
        WarpedMetric m(w);
        for (int i = 0; i < 12; ++i) {
            Point p{ux(rng), uth(rng)};
            Point q{ux(rng), uth(rng)};
            auto a = distance(m, p, q);
            auto b = distance(m, q, p);
            CHECK(std::abs(a.value - b.value) < 1e-6);
        }
    }
}

TEST_CASE("triangle inequality on sampled triples") {
    WarpedMetric m(warps::example_cap());
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ux(-4.0, 4.0);
    std::uniform_real_distribution<double> uth(0.0, 2.0 * kPi);
    for (int i = 0; i < 6; ++i) {
        Point a{ux(rng), uth(rng)}, b{ux(rng), uth(rng)}, c{ux(rng), uth(rng)};
        const double ab = distance(m, a, b).value;
        const double bc = distance(m, b, c).value;
        const double ac = distance(m, a, c).value;
        CHECK(ac <= ab + bc + 1e-6);
    }
}

TEST_CASE("flat loop bound is pi at any point") {
    WarpedMetric m(warps::flat());
    auto b = loop_injectivity_bound(m, {0.7, 0.3});
    REQUIRE(b.has_value());
    CHECK(*b == doctest::Approx(kPi).epsilon(1e-8));
}

TEST_CASE("example manifold loop bounds decay outward") {
    WarpedMetric m(warps::example_cap());
    auto b5 = loop_injectivity_bound(m, {5.0, 0.0});
    auto b10 = loop_injectivity_bound(m, {10.0, 0.0});
    REQUIRE(b5.has_value());
    REQUIRE(b10.has_value());
    CHECK(*b5 <= 0.75);
    CHECK(*b10 < *b5);
    // fiber-loop proxy with slack: bound <= 1.2 * pi * sqrt(f)
    CHECK(*b5 <= 1.2 * kPi * std::sqrt(m.fiber(5.0)));
    CHECK(*b10 <= 1.2 * kPi * std::sqrt(m.fiber(10.0)));
}
