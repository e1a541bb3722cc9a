#include "geolab/covariant.hpp"

namespace geolab {

FrameJet covariant_scalar_jet(const std::function<double(Point)>& fn,
                              const WarpedMetric& m, Point p, double step) {
    const double d = step;
    const double dth0 = d / std::sqrt(m.fiber(p.x));
    const double dthp = d / std::sqrt(m.fiber(p.x + d));
    const double dthm = d / std::sqrt(m.fiber(p.x - d));

    const double c = fn(p);
    const double xp = fn({p.x + d, p.theta});
    const double xm = fn({p.x - d, p.theta});
    const double tp = fn({p.x, p.theta + dth0});
    const double tm = fn({p.x, p.theta - dth0});
    const double pp = fn({p.x + d, p.theta + dthp});
    const double pm = fn({p.x + d, p.theta - dthp});
    const double mp = fn({p.x - d, p.theta + dthm});
    const double mm = fn({p.x - d, p.theta - dthm});

    FrameJet j;
    j.value = c;
    j.g1 = (xp - xm) / (2 * d);
    j.g2 = (tp - tm) / (2 * d);
    j.h11 = (xp - 2 * c + xm) / (d * d);
    const double e2u_p = (pp - pm) / (2 * d);
    const double e2u_m = (mp - mm) / (2 * d);
    j.h12 = (e2u_p - e2u_m) / (2 * d);
    const double fib = m.fiber(p.x);
    j.h22 = (tp - 2 * c + tm) / (d * d) + 0.5 * m.fiber_d1(p.x) / fib * j.g1;
    return j;
}

FrameJet frame_jet_from_partials(const WarpedMetric& m, Point p, double value,
                                 const std::array<double, 2>& grad,
                                 const std::array<double, 3>& hess) {
    const double f = m.fiber(p.x);
    const double rf = std::sqrt(f);
    const auto gamma = m.christoffels(p.x);

    // Coordinate covariant Hessian C_ij = d_i d_j - Gamma^k_ij d_k.
    const double c11 = hess[0] - gamma.g111 * grad[0] - gamma.g211 * grad[1];
    const double c12 = hess[1] - gamma.g112 * grad[0] - gamma.g212 * grad[1];
    const double c22 = hess[2] - gamma.g122 * grad[0] - gamma.g222 * grad[1];

    FrameJet j;
    j.value = value;
    j.g1 = grad[0];
    j.g2 = grad[1] / rf;
    j.h11 = c11;
    j.h12 = c12 / rf;
    j.h22 = c22 / f;
    return j;
}

} // namespace geolab
