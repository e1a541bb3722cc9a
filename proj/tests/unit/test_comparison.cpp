#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geolab/comparison.hpp"
#include "geolab/error.hpp"
#include "geolab/warp.hpp"

#include <cmath>
#include <numbers>

using namespace geolab;
constexpr double kPi = std::numbers::pi;

TEST_CASE("profile equals the lower bound at the boundary radius") {
    auto rep = hessian_comparison_check(1.0, kPi / 4.0);
    CHECK(rep.profile_value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.lower_bound == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.profile_quadrature == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("profile value at rho = pi/6 is sqrt(3)") {
    auto rep = hessian_comparison_check(1.0, kPi / 6.0);
    CHECK(rep.profile_value == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK(std::abs(rep.profile_quadrature - rep.profile_value) < 1e-8);
    CHECK(rep.profile_value >= rep.lower_bound);
}

TEST_CASE("quadrature matches closed form at several radii") {
    for (double rho : {kPi / 8.0, kPi / 6.0, kPi / 4.0}) {
        auto rep = hessian_comparison_check(1.0, rho, 512);
        CHECK(std::abs(rep.profile_quadrature - rep.profile_value) < 1e-8);
        CHECK(rep.profile_value >= rep.lower_bound - 1e-12);
    }
}

TEST_CASE("profile is decreasing in rho on the admissible interval") {
    double prev = 1e300;
    for (double rho = 0.05; rho <= kPi / 4.0 + 1e-12; rho += 0.02) {
        const double v = hessian_comparison_check(1.0, rho).profile_value;
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("radius outside the admissible interval is rejected") {
    CHECK_THROWS_AS(hessian_comparison_check(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(hessian_comparison_check(1.0, kPi / 4.0 + 0.01), DomainError);
    CHECK_THROWS_AS(hessian_comparison_check(4.0, kPi / 4.0), DomainError);
}

TEST_CASE("measured flat Hessian orthogonal to the geodesic is 1/rho") {
    WarpedMetric m(warps::flat());
    const double h = measured_hessian_orthogonal(m, {0.0, 0.0}, {0.5, 0.0});
    CHECK(h == doctest::Approx(2.0).epsilon(1e-4));
    CHECK(h >= kPi / 2.0 - 1e-4);
}

TEST_CASE("flat Laplacian of distance is 1/rho with zero correction") {
    WarpedMetric m(warps::flat());
    auto sampler = sampler_from_warped(m);

    auto rep = laplacian_of_distance(m, sampler, {0.0, 0.0}, {0.5, 0.0}, 0.0, 1.0);
    CHECK(rep.value == doctest::Approx(2.0).epsilon(1e-4));
    CHECK(rep.correction == doctest::Approx(0.0).epsilon(1e-9));

    auto rep2 = laplacian_of_distance(m, sampler, {0.0, 0.0}, {2.0, 0.0}, 0.0, 0.34);
    CHECK(rep2.value == doctest::Approx(0.5).epsilon(1e-4));
    CHECK(rep2.within_upper);
    CHECK(rep2.within_lower);
}

TEST_CASE("homothety flow keeps Christoffels, scales the Laplacian") {
    WarpedMetric m(warps::hyperbolic());
    const double t = 0.1;
    const double scale = 1.0 + 2.0 * t;
    auto flowed = scaled_sampler(m, scale);

    Point p0{0.0, 0.0}, q{0.45, 0.35};
    auto rep = laplacian_of_distance(m, flowed, p0, q, t, 10.0);
    CHECK(rep.correction == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(rep.value == doctest::Approx(rep.value_initial / scale).epsilon(1e-10));
}

TEST_CASE("near-cut points are rejected") {
    WarpedMetric m(warps::flat());
    auto sampler = sampler_from_warped(m);
    CHECK_THROWS_AS(
        laplacian_of_distance(m, sampler, {0.0, 0.0}, {0.0, kPi}, 0.0, 1.0),
        CutLocusError);
}
