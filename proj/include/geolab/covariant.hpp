#pragma once
#include "geolab/metric.hpp"

#include <array>
#include <cmath>
#include <functional>

namespace geolab {

/// Value, gradient and covariant Hessian of a scalar field in the
/// orthonormal frame e1 = d_x, e2 = d_theta / sqrt(f) of a warped metric.
struct FrameJet {
    double value = 0.0;
    double g1 = 0.0, g2 = 0.0;            // frame gradient
    double h11 = 0.0, h12 = 0.0, h22 = 0.0; // frame covariant Hessian
};

/// Frame jet by central differences with metric-normalized steps
/// (coordinate theta steps are step / sqrt(f) so both directions
/// difference over the same arclength).
FrameJet covariant_scalar_jet(const std::function<double(Point)>& fn,
                              const WarpedMetric& m, Point p, double step);

/// Frame jet from exact coordinate partials: grad = (psi_x, psi_theta),
/// hess = (psi_xx, psi_xtheta, psi_thetatheta). Covariant corrections use
/// the metric's Christoffel symbols.
FrameJet frame_jet_from_partials(const WarpedMetric& m, Point p, double value,
                                 const std::array<double, 2>& grad,
                                 const std::array<double, 3>& hess);

inline double frame_grad_norm(const FrameJet& j) {
    return std::sqrt(j.g1 * j.g1 + j.g2 * j.g2);
}
inline double frame_hess_norm(const FrameJet& j) {
    return std::sqrt(j.h11 * j.h11 + 2.0 * j.h12 * j.h12 + j.h22 * j.h22);
}

} // namespace geolab
