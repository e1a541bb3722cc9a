#pragma once
#include "geolab/geodesic.hpp"

#include <optional>
#include <vector>

namespace geolab {

struct DistanceOptions {
    int winding_max = 2;        // candidate classes w in [-winding_max, winding_max]
    double step = 4e-3;         // fine RK4 step for refinement and lengths
    double sweep_step = 1.6e-2; // coarse step for bracketing sweeps
    int sweep_angles = 24;      // initial bracketing resolution in (0, pi)
    int sweep_max_depth = 6;    // adaptive subdivision near validity edges
    double domain_limit = 20.0;
    double budget_factor = 1.6; // arclength budget multiplier
    double budget_pad = 2.0;
    double miss_tol = 1e-9;     // |x_cross - x_q| target for the secant
    double near_cut_rel = 1e-4; // two minimizers this close => near cut
    bool fast_mode = false;     // single root per class, reduced sweep
};

struct DistanceResult {
    double value = 0.0;
    int winding = 0;
    int minimizer_count = 1;
    bool near_cut = false;
};

/// One solved boundary-value geodesic between the endpoints.
struct DistanceCandidate {
    double length = 0.0;
    int winding = 0;
    double angle = 0.0; // initial shooting angle at p (mirrored classes
                        // store the angle of the mirrored problem)
    bool mirrored = false;
    double arrival_vx = 0.0;     // dx/ds at q
    double arrival_vtheta = 0.0; // dtheta/ds at q (pre-mirror sign)
};

/// Minimal distance by angle-shooting over winding classes with bisection
/// bracketing and secant refinement. Throws ConvergenceError when no class
/// yields a solved geodesic.
DistanceResult distance(const ProfileMetric& m, Point p, Point q,
                        const DistanceOptions& opts = {});
DistanceResult distance(const WarpedMetric& m, Point p, Point q,
                        const DistanceOptions& opts = {});

/// All solved candidates, sorted by length (used by cut detection, the
/// measured Hessian of the distance and the smoothing quadratures).
std::vector<DistanceCandidate> distance_candidates(const ProfileMetric& m,
                                                   Point p, Point q,
                                                   const DistanceOptions& opts = {});

/// Solved geodesics from p to the cover point (x_q, p.theta + dtheta_abs)
/// for a single winding class; dtheta_abs must be positive. A hint angle
/// from a neighbouring query warm-starts the root search.
std::vector<DistanceCandidate> solve_winding_class(const ProfileMetric& m,
                                                   Point p, double x_q,
                                                   double dtheta_abs,
                                                   const DistanceOptions& opts,
                                                   std::optional<double> hint_angle);

/// Upper bound for the injectivity radius at p: half the length of the
/// shortest geodesic loop at p with winding one. Empty when no loop is
/// found within the search budget.
std::optional<double> loop_injectivity_bound(const ProfileMetric& m, Point p,
                                             const DistanceOptions& opts = {});
std::optional<double> loop_injectivity_bound(const WarpedMetric& m, Point p,
                                             const DistanceOptions& opts = {});

} // namespace geolab
