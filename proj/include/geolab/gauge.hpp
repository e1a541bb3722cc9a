#pragma once
#include "geolab/interp.hpp"
#include "geolab/metric.hpp"

#include <functional>
#include <vector>

namespace geolab {

/// Coordinate change between the warped chart dx^2 + f(x) dtheta^2 and the
/// conformal chart e^{2u(w)} (dw^2 + dtheta^2):
///     w(x) = w_ref + integral dx / sqrt(f),   u(w) = 1/2 log f(x(w)).
struct GaugeTransform {
    std::vector<double> x_nodes;
    std::vector<double> w_nodes;
    std::vector<double> u_nodes; // u at w_nodes

    MonotoneCubic w_of_x;
    MonotoneCubic x_of_w;
    MonotoneCubic u_of_w;

    double conformal_factor(double w) const; // e^{2u(w)}
};

/// Warped -> conformal on [x_lo, x_hi]; the w origin is pinned by
/// w(anchor_x) = anchor_w. Throws GaugeError if f is not positive.
GaugeTransform gauge_transform(const WarpedMetric& metric, double x_lo,
                               double x_hi, int nodes = 4097,
                               double anchor_x = 0.0, double anchor_w = 0.0);

/// Conformal -> warped on [w_lo, w_hi] for a given exponent u(w); inverse
/// of the above: x(w) = x_ref + integral e^{u} dw, f(x) = e^{2u(w(x))}.
/// Throws GaugeError if the coordinate map fails to be monotone.
GaugeTransform gauge_transform_inverse(const std::function<double(double)>& u,
                                       double w_lo, double w_hi,
                                       int nodes = 4097, double anchor_w = 0.0,
                                       double anchor_x = 0.0);

/// Warp profile recovered from a conformal-side transform (round trip).
WarpFunction warp_from_gauge(const GaugeTransform& gauge,
                             const std::string& name = "roundtrip");

} // namespace geolab
