#pragma once
#include "geolab/distance.hpp"
#include "geolab/metric.hpp"

#include <functional>

namespace geolab {

/// Space-form Hessian comparison data at distance rho under curvature
/// bound k0. profile_value is the model Hessian of the distance in the
/// orthogonal direction; it dominates pi/(4 rho) while
/// rho <= pi/(4 sqrt(k0)).
struct ComparisonReport {
    double rho = 0.0;
    double k0 = 0.0;
    double profile_value = 0.0;     // closed form
    double profile_quadrature = 0.0; // Jacobi-field energy integral
    double lower_bound = 0.0;       // pi / (4 rho)
    double hessian_orthogonal = 0.0; // measured value when requested
};

/// Evaluate the comparison profile two ways: the closed form
/// sqrt(k0) sin(2 sqrt(k0) rho) / (2 sin^2(sqrt(k0) rho)) and the energy
/// integral of the model Jacobi field sin(sqrt(k0) s)/sin(sqrt(k0) rho),
/// by composite Simpson with quadrature_n subintervals.
/// Throws DomainError unless 0 < rho <= pi/(4 sqrt(k0)).
ComparisonReport hessian_comparison_check(double k0, double rho,
                                          int quadrature_n = 256);

/// Measured Hess rho(X, X) at q for the distance from p0, with X the unit
/// direction orthogonal to the arriving minimal geodesic: covariant
/// 5-point finite differences with the metric's Christoffel symbols.
double measured_hessian_orthogonal(const WarpedMetric& m, Point p0, Point q,
                                   double step = 1e-3,
                                   const DistanceOptions& opts = {});

/// Metric data used when a distance Laplacian is taken under an evolved
/// metric: components and Christoffels at a point.
struct MetricAtPoint {
    double g11 = 1.0, g22 = 1.0;
    Christoffels gamma;
};
using MetricSampler = std::function<MetricAtPoint(Point)>;

MetricSampler sampler_from_warped(const WarpedMetric& m);

/// Uniform rescaling c * g: same Christoffels, scaled components.
MetricSampler scaled_sampler(const WarpedMetric& m, double factor);

struct LaplacianReport {
    double rho = 0.0;
    double value = 0.0;           // Laplacian of rho under g(t)
    double value_initial = 0.0;   // same under g(0)
    double correction = 0.0;      // Christoffel-difference term
    bool within_upper = false;    // value <= C (1 + 1/rho)
    bool within_lower = false;    // value >= -C sqrt(t)
};

/// Laplacian of the distance from p0 at q under the evolved metric,
/// decomposed as g^{ij}(t) (Hess^0 rho - (Gamma(t)-Gamma(0)) drho), with
/// the bound check for the supplied constant. Throws CutLocusError when q
/// is flagged near the cut locus of p0.
LaplacianReport laplacian_of_distance(const WarpedMetric& g0,
                                      const MetricSampler& gt, Point p0,
                                      Point q, double t, double bound_c,
                                      double step = 1e-3,
                                      const DistanceOptions& opts = {});

} // namespace geolab
