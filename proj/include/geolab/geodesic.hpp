#pragma once
#include "geolab/metric.hpp"

#include <functional>
#include <vector>

namespace geolab {

/// Diagonal theta-independent metric A(x) dx^2 + B(x) dtheta^2; the level
/// at which geodesics, distance and loop searches operate. A warped metric
/// has A == 1; conformal slices e^{psi(x)} (dx^2 + f dtheta^2) have both.
struct ProfileMetric {
    std::function<double(double)> radial;    // A
    std::function<double(double)> radial_d1; // A'
    std::function<double(double)> fiber;     // B
    std::function<double(double)> fiber_d1;  // B'

    static ProfileMetric from_warped(const WarpedMetric& m);
};

/// Phase-space sample along a unit-speed geodesic.
struct GeodesicState {
    double s = 0.0; // arclength
    double x = 0.0, theta = 0.0;
    double vx = 0.0, vtheta = 0.0; // coordinate velocities dx/ds, dtheta/ds
};

struct GeodesicOptions {
    double step = 4e-3;         // RK4 arclength step
    double domain_limit = 20.0; // |x| bound of the truncated working domain
    int sample_stride = 8;      // keep every n-th state in Geodesic::samples
};

/// Integrated geodesic with its first integrals. theta accumulates without
/// wrapping (universal-cover angle).
struct Geodesic {
    Point start;
    double angle = 0.0;    // initial angle against d/dx in the orthonormal frame
    double clairaut = 0.0; // B theta', conserved
    bool left_domain = false;
    std::vector<GeodesicState> samples;
    GeodesicState end;
};

/// Shoot a unit-speed geodesic of the given arclength. If the trajectory
/// leaves |x| <= domain_limit the result is flagged (left_domain) and
/// truncated, not extrapolated.
Geodesic shoot_geodesic(const ProfileMetric& m, Point start, double angle,
                        double length, const GeodesicOptions& opts = {});

Geodesic shoot_geodesic(const WarpedMetric& m, Point start, double angle,
                        double length, const GeodesicOptions& opts = {});

/// Result of integrating until the cover angle reaches a target.
struct ThetaCrossing {
    bool crossed = false;
    bool left_domain = false;
    double s = 0.0;     // arclength at crossing
    double x = 0.0;     // x at crossing
    double vx = 0.0;    // dx/ds at crossing
    double vtheta = 0.0;
    GeodesicState last; // final state when not crossed
};

/// Integrate from `start` at `angle` (must have sin(angle) > 0 so the
/// cover angle is strictly increasing) until theta - start.theta reaches
/// `dtheta_target` > 0, the arclength budget runs out, or the trajectory
/// leaves the domain. The crossing is located to the integrator's order
/// by Hermite interpolation within the final step.
ThetaCrossing integrate_to_theta(const ProfileMetric& m, Point start,
                                 double angle, double dtheta_target,
                                 double budget, const GeodesicOptions& opts);

/// Largest |unit-speed defect| and |Clairaut drift| over the samples;
/// the per-type invariants, exposed for tests.
struct GeodesicDrift {
    double speed = 0.0;
    double clairaut = 0.0;
};
GeodesicDrift geodesic_drift(const ProfileMetric& m, const Geodesic& g);

} // namespace geolab
