#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geolab/cutoff.hpp"
#include "geolab/error.hpp"

#include <cmath>

using geolab::CutoffProfile;

TEST_CASE("plateau and support values are exact") {
    CutoffProfile cut;
    CHECK(cut.eta(0.0) == 1.0);
    CHECK(cut.eta(0.3) == 1.0);
    CHECK(cut.eta(0.5) == 1.0);
    CHECK(cut.eta(1.0) == 0.0);
    CHECK(cut.eta(1.2) == 0.0);
    CHECK(cut.eta(-0.4) == 1.0);
    CHECK(cut.eta(-3.0) == 0.0);
    CHECK(cut.eta_d1(0.25) == 0.0);
    CHECK(cut.eta_d2(0.25) == 0.0);
    CHECK(cut.eta_d1(1.5) == 0.0);
    CHECK(cut.eta_d2(1.5) == 0.0);
}

TEST_CASE("transition is monotone, even and in (0,1)") {
    CutoffProfile cut;
    const double v = cut.eta(0.75);
    CHECK(v > 0.0);
    CHECK(v < 1.0);
    CHECK(cut.eta(0.6) > cut.eta(0.75));
    CHECK(cut.eta(0.75) > cut.eta(0.9));
    for (double s = 0.05; s < 1.3; s += 0.07) {
        CHECK(cut.eta(s) == doctest::Approx(cut.eta(-s)).epsilon(1e-15));
        CHECK(cut.eta_d1(s) == doctest::Approx(-cut.eta_d1(-s)).epsilon(1e-12));
    }
    // eta' <= 0 for s >= 0
    for (double s = 0.0; s < 1.1; s += 0.01) {
        CHECK(cut.eta_d1(s) <= 1e-15);
    }
}

TEST_CASE("closed-form derivatives match central differences") {
    CutoffProfile cut;
    const double h = 1e-5;
    for (double s : {0.55, 0.6, 0.66, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95}) {
        const double fd1 = (cut.eta(s + h) - cut.eta(s - h)) / (2 * h);
        const double fd2 =
            (cut.eta(s + h) - 2 * cut.eta(s) + cut.eta(s - h)) / (h * h);
        CHECK(cut.eta_d1(s) == doctest::Approx(fd1).epsilon(1e-6));
        CHECK(cut.eta_d2(s) == doctest::Approx(fd2).epsilon(1e-4));
    }
}

TEST_CASE("sup(phi'^2/phi) equals 4 sup(eta'^2)") {
    CutoffProfile cut;
    const double lhs = cut.phi_ratio_sup();
    const double rhs = 4.0 * cut.eta_d1_sq_sup();
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-3));
    CHECK(std::isfinite(lhs));
}

TEST_CASE("cutoff_eval dispatch and order validation") {
    CutoffProfile cut;
    CHECK(geolab::cutoff_eval(cut, 0.3, 0) == 1.0);
    CHECK(geolab::cutoff_eval(cut, 1.2, 0) == 0.0);
    CHECK(geolab::cutoff_eval(cut, 0.75, 1) == cut.eta_d1(0.75));
    CHECK_THROWS_AS(geolab::cutoff_eval(cut, 0.0, 3), geolab::ArgumentError);
}
