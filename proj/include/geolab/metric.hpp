#pragma once
#include "geolab/warp.hpp"

#include <array>
#include <functional>
#include <span>
#include <vector>

namespace geolab {

/// Point on the cylinder: x along the axis, theta on the fiber circle.
struct Point {
    double x = 0.0;
    double theta = 0.0;
};

/// Christoffel symbols Gamma^k_ij of a 2D metric, symmetric in (i,j).
/// Index 1 is x, index 2 is theta.
struct Christoffels {
    double g111 = 0.0, g112 = 0.0, g122 = 0.0; // upper index 1
    double g211 = 0.0, g212 = 0.0, g222 = 0.0; // upper index 2
};

/// Pointwise curvature data of a warped metric at one x.
/// Curvature convention: R(X,Y)Z = Dx Dy Z - Dy Dx Z - D[X,Y] Z and
/// r1212 = g(R(d1,d2)d2, d1) = K * det g. rm_norm_sq is convention-free.
struct CurvatureBundle {
    Christoffels christoffel;
    double r1212 = 0.0;
    double ricci11 = 0.0, ricci22 = 0.0; // Ric = K g on surfaces
    double gauss = 0.0;                  // K = -(sqrt f)'' / sqrt f
    double rm_norm_sq = 0.0;             // 2 (g^11 g^22 r1212)^2
    double rm_norm = 0.0;                // sqrt(rm_norm_sq)
};

/// Two-sided metric equivalence constants: c1 g(0) <= g(t) <= c2 g(0)
/// over the sampled points, attained where recorded.
struct EquivalenceReport {
    double c1 = 1.0;
    double c2 = 1.0;
    Point where_c1, where_c2;
};

/// Diagonal metric components {g11, g22} as a field over the cylinder.
using MetricComponents = std::function<std::array<double, 2>(Point)>;

/// Cylinder metric dx^2 + f(x) dtheta^2.
class WarpedMetric {
public:
    explicit WarpedMetric(WarpFunction warp) : warp_(std::move(warp)) {}

    const WarpFunction& warp() const { return warp_; }
    double fiber(double x) const { return warp_.eval(x); }
    double fiber_d1(double x) const { return warp_.d1(x); }
    double fiber_d2(double x) const { return warp_.d2(x); }

    double g11(double) const { return 1.0; }
    double g22(double x) const { return fiber(x); }
    double inv_g11(double) const { return 1.0; }
    double inv_g22(double x) const { return 1.0 / fiber(x); }

    Christoffels christoffels(double x) const;
    MetricComponents components() const;

private:
    WarpFunction warp_;
};

/// All curvature data at coordinate x. Throws DomainError if f(x) <= 0.
CurvatureBundle curvature_bundle(const WarpedMetric& metric, double x);

/// Sampled sup of |Rm| over [x_lo, x_hi]; the curvature bound estimate.
double curvature_bound(const WarpedMetric& metric, double x_lo, double x_hi,
                       int samples = 4096);

/// Equivalence constants of gt relative to g0 over the samples.
/// Throws ArgumentError on an empty sample list.
EquivalenceReport metric_equivalence(const MetricComponents& g0,
                                     const MetricComponents& gt,
                                     std::span<const Point> samples);

/// Christoffels of a general diagonal metric from components and their
/// first partials (x-partials in [0], theta-partials in [1]).
Christoffels diagonal_christoffels(double g11, double g22,
                                   const std::array<double, 2>& dg11,
                                   const std::array<double, 2>& dg22);

/// Gauss curvature of a diagonal metric given only its component field,
/// by nested 4th-order central differences with the given step.
double gauss_curvature_of_components(const MetricComponents& g, Point p,
                                     double step = 2e-2);

} // namespace geolab
