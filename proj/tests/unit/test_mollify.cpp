#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geolab/error.hpp"
#include "geolab/mollify.hpp"
#include "geolab/sampling.hpp"

#include <cmath>
#include <memory>
#include <numbers>

using namespace geolab;
constexpr double kPi = std::numbers::pi;

namespace {

std::shared_ptr<const DistanceField> flat_field(double halfwidth) {
    static std::shared_ptr<const DistanceField> cached;
    static double cached_width = 0.0;
    if (!cached || cached_width != halfwidth) {
        WarpedMetric m(warps::flat());
        DistanceFieldOptions fo;
        fo.initial_rays = 2048;
        cached = std::make_shared<DistanceField>(m, Point{0.0, 0.0}, halfwidth, fo);
        cached_width = halfwidth;
    }
    return cached;
}

} // namespace

TEST_CASE("kernel normalization: convolving 1 gives 1") {
    WarpedMetric m(warps::flat());
    auto one = [](Point) { return 7.0; };
    for (double eps : {0.1, 0.2, 0.4}) {
        const double v = green_wu_convolve(one, {0.3, 0.9}, eps, m);
        CHECK(v == doctest::Approx(7.0).epsilon(1e-6));
    }
}

TEST_CASE("odd symmetry: convolving x about p=(2,0) returns 2") {
    WarpedMetric m(warps::flat());
    auto fx = [](Point p) { return p.x; };
    const double v = green_wu_convolve(fx, {2.0, 0.0}, 0.3, m);
    CHECK(v == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("kernel support confines averaging to a metric ball") {
    WarpedMetric m(warps::example_cap());
    auto field = std::make_shared<DistanceField>(m, Point{0.0, 0.0}, 6.0);
    auto fn = [&](Point z) { return (*field)(z); };
    const Point p{4.0, 0.0};
    const double rho_p = (*field)(p);
    const double v = green_wu_convolve(fn, p, 0.2, m);
    CHECK(v >= rho_p - 0.2);
    CHECK(v <= rho_p + 0.2);
}

TEST_CASE("eps beyond the domain margin is rejected") {
    WarpedMetric m(warps::flat());
    GreenWuOptions opts;
    opts.domain_limit = 5.0;
    CHECK_THROWS_AS(
        green_wu_convolve([](Point) { return 1.0; }, {4.95, 0.0}, 0.2, m, opts),
        DomainError);
}

TEST_CASE("flat smoothed distance: sandwich, truncation zone, far value") {
    WarpedMetric m(warps::flat());
    auto field = flat_field(9.0);
    SmoothedDistance sd(m, field, 1.0, 8.0); // k1 = pi/4
    CHECK(sd.radius() == doctest::Approx(kPi / 4.0));

    // Ball average of a nearly linear function stays near the center value.
    const auto far = sd.evaluate({5.0, 0.0});
    CHECK(std::abs(far.smoothed - 5.0) <
          2.0 * sd.radius() * sd.radius() / 5.0 + 1e-3);

    // Truncation: smoothed <= a/2 forces the truncated value to vanish.
    const auto near = sd.evaluate({2.0, 1.0});
    CHECK(near.smoothed < 4.0);
    CHECK(near.truncated == 0.0);

    // Sandwich on seeded samples.
    for (const Point& y : seeded_band_samples(21, 24, 0.5, 7.5, true)) {
        const double rho = (*field)(y);
        const auto v = sd.evaluate(y);
        CHECK(v.smoothed >= rho - sd.radius() - 1e-3);
        CHECK(v.smoothed <= rho + sd.radius() + 1e-3);
    }
}

TEST_CASE("doubling quadrature resolution moves the value by < 1e-3") {
    WarpedMetric m(warps::flat());
    auto field = flat_field(9.0);
    SmoothedDistanceOptions coarse;
    SmoothedDistanceOptions fine;
    fine.nodes_across = 128;
    SmoothedDistance sd_c(m, field, 1.0, 8.0, coarse);
    SmoothedDistance sd_f(m, field, 1.0, 8.0, fine);
    const Point y{5.0, 0.0};
    CHECK(std::abs(sd_c.evaluate(y).smoothed - sd_f.evaluate(y).smoothed) < 1e-3);
}

TEST_CASE("truncated value equals smoothed once smoothed >= a") {
    WarpedMetric m(warps::flat());
    auto field = flat_field(9.0);
    SmoothedDistance sd(m, field, 1.0, 4.0);
    const auto v = sd.evaluate({6.5, 2.0});
    CHECK(v.smoothed >= 4.0);
    CHECK(v.truncated == doctest::Approx(v.smoothed).epsilon(1e-15));
}

TEST_CASE("flat gradient norms stay within 1 + 5e-3") {
    WarpedMetric m(warps::flat());
    auto field = flat_field(9.0);
    SmoothedDistance sd(m, field, 1.0, 1.0);
    std::vector<Point> samples;
    for (double r : {3.0, 4.5, 6.0, 7.5}) samples.push_back({r, 0.7 * r});
    auto rep = derivative_bound_report(sd, samples, m);
    REQUIRE(rep.samples.size() == samples.size());
    CHECK(rep.grad_max <= 1.0 + 5e-3);
}

TEST_CASE("samples at the domain edge are skipped with a warning entry") {
    WarpedMetric m(warps::flat());
    auto field = flat_field(9.0);
    SmoothedDistanceOptions opts;
    opts.domain_limit = 8.0;
    SmoothedDistance sd(m, field, 1.0, 8.0, opts);
    std::vector<Point> samples{{5.0, 0.0}, {7.95, 0.0}};
    auto rep = derivative_bound_report(sd, samples, m);
    CHECK(rep.samples.size() == 1);
    CHECK(rep.skipped.size() == 1);
}
