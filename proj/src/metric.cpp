#include "geolab/metric.hpp"
#include "geolab/error.hpp"

#include <cmath>
#include <string>

namespace geolab {

Christoffels WarpedMetric::christoffels(double x) const {
    const double f = fiber(x);
    const double df = fiber_d1(x);
    Christoffels c;
    c.g122 = -0.5 * df;
    c.g212 = 0.5 * df / f;
    return c;
}

MetricComponents WarpedMetric::components() const {
    auto f = warp_.eval;
    return [f](Point p) -> std::array<double, 2> { return {1.0, f(p.x)}; };
}

CurvatureBundle curvature_bundle(const WarpedMetric& metric, double x) {
    const double f = metric.fiber(x);
    if (!(f > 0.0)) {
        throw DomainError("curvature_bundle: warp non-positive at x=" +
                          std::to_string(x));
    }
    const double df = metric.fiber_d1(x);
    const double d2f = metric.fiber_d2(x);

    CurvatureBundle b;
    b.christoffel = metric.christoffels(x);
    b.r1212 = -0.5 * d2f + 0.25 * df * df / f;
    b.gauss = b.r1212 / f;
    b.ricci11 = b.gauss;
    b.ricci22 = b.gauss * f;
    const double scalar = metric.inv_g11(x) * metric.inv_g22(x) * b.r1212;
    b.rm_norm_sq = 2.0 * scalar * scalar;
    b.rm_norm = std::sqrt(b.rm_norm_sq);
    return b;
}

double curvature_bound(const WarpedMetric& metric, double x_lo, double x_hi,
                       int samples) {
    double sup = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double x = x_lo + (x_hi - x_lo) * (i + 0.5) / samples;
        sup = std::max(sup, curvature_bundle(metric, x).rm_norm);
    }
    return sup;
}

EquivalenceReport metric_equivalence(const MetricComponents& g0,
                                     const MetricComponents& gt,
                                     std::span<const Point> samples) {
    if (samples.empty()) {
        throw ArgumentError("metric_equivalence: empty sample list");
    }
    EquivalenceReport rep;
    bool first = true;
    for (const Point& p : samples) {
        const auto a = g0(p);
        const auto b = gt(p);
        for (int k = 0; k < 2; ++k) {
            const double ratio = b[k] / a[k];
            if (first || ratio < rep.c1) {
                rep.c1 = ratio;
                rep.where_c1 = p;
            }
            if (first || ratio > rep.c2) {
                rep.c2 = ratio;
                rep.where_c2 = p;
            }
            first = false;
        }
    }
    return rep;
}

Christoffels diagonal_christoffels(double g11, double g22,
                                   const std::array<double, 2>& dg11,
                                   const std::array<double, 2>& dg22) {
    Christoffels c;
    c.g111 = 0.5 * dg11[0] / g11;
    c.g112 = 0.5 * dg11[1] / g11;
    c.g122 = -0.5 * dg22[0] / g11;
    c.g211 = -0.5 * dg11[1] / g22;
    c.g212 = 0.5 * dg22[0] / g22;
    c.g222 = 0.5 * dg22[1] / g22;
    return c;
}

namespace {

// 4th-order central difference of a scalar function of one coordinate.
template <typename F>
double diff4(const F& fn, double t, double h) {
    return (8.0 * (fn(t + h) - fn(t - h)) - (fn(t + 2 * h) - fn(t - 2 * h))) /
           (12.0 * h);
}

} // namespace

double gauss_curvature_of_components(const MetricComponents& g, Point p,
                                     double step) {
    // K = -1/(2W) [ d/dx (g22_x / W) + d/dtheta (g11_theta / W) ],
    // W = sqrt(g11 g22); the orthogonal-coordinates Gauss formula.
    auto w_at = [&](Point q) {
        const auto c = g(q);
        return std::sqrt(c[0] * c[1]);
    };
    auto p_term = [&](double x) {
        Point q{x, p.theta};
        const double d = diff4(
            [&](double t) { return g(Point{t, q.theta})[1]; }, x, step);
        return d / w_at(q);
    };
    auto q_term = [&](double th) {
        Point q{p.x, th};
        const double d = diff4(
            [&](double t) { return g(Point{q.x, t})[0]; }, th, step);
        return d / w_at(q);
    };
    const double div = diff4(p_term, p.x, step) + diff4(q_term, p.theta, step);
    return -div / (2.0 * w_at(p));
}

} // namespace geolab
