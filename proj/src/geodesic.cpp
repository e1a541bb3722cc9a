#include "geolab/geodesic.hpp"
#include "geolab/error.hpp"

#include <algorithm>
#include <cmath>

namespace geolab {

ProfileMetric ProfileMetric::from_warped(const WarpedMetric& m) {
    auto f = m.warp().eval;
    auto df = m.warp().d1;
    return {[](double) { return 1.0; }, [](double) { return 0.0; },
            std::move(f), std::move(df)};
}

namespace {

struct State {
    double x, theta, vx, vth;
};

// Geodesic equations of A(x) dx^2 + B(x) dtheta^2:
//   x''     = -(A'/2A) x'^2 + (B'/2A) theta'^2
//   theta'' = -(B'/B) x' theta'
inline State deriv(const ProfileMetric& m, const State& y) {
    const double a = m.radial(y.x);
    const double da = m.radial_d1(y.x);
    const double b = m.fiber(y.x);
    const double db = m.fiber_d1(y.x);
    State d;
    d.x = y.vx;
    d.theta = y.vth;
    d.vx = (-0.5 * da * y.vx * y.vx + 0.5 * db * y.vth * y.vth) / a;
    d.vth = -(db / b) * y.vx * y.vth;
    return d;
}

inline State rk4_step(const ProfileMetric& m, const State& y, double h) {
    const State k1 = deriv(m, y);
    State t{y.x + 0.5 * h * k1.x, y.theta + 0.5 * h * k1.theta,
            y.vx + 0.5 * h * k1.vx, y.vth + 0.5 * h * k1.vth};
    const State k2 = deriv(m, t);
    t = {y.x + 0.5 * h * k2.x, y.theta + 0.5 * h * k2.theta,
         y.vx + 0.5 * h * k2.vx, y.vth + 0.5 * h * k2.vth};
    const State k3 = deriv(m, t);
    t = {y.x + h * k3.x, y.theta + h * k3.theta, y.vx + h * k3.vx,
         y.vth + h * k3.vth};
    const State k4 = deriv(m, t);
    return {y.x + h / 6.0 * (k1.x + 2 * k2.x + 2 * k3.x + k4.x),
            y.theta + h / 6.0 * (k1.theta + 2 * k2.theta + 2 * k3.theta + k4.theta),
            y.vx + h / 6.0 * (k1.vx + 2 * k2.vx + 2 * k3.vx + k4.vx),
            y.vth + h / 6.0 * (k1.vth + 2 * k2.vth + 2 * k3.vth + k4.vth)};
}

State initial_state(const ProfileMetric& m, Point start, double angle) {
    const double a = m.radial(start.x);
    const double b = m.fiber(start.x);
    return {start.x, start.theta, std::cos(angle) / std::sqrt(a),
            std::sin(angle) / std::sqrt(b)};
}

// Cubic Hermite value at fraction t in [0,1] of a step of size h.
inline double hermite(double y0, double y1, double d0, double d1, double h,
                      double t) {
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * h * d0 +
           (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * h * d1;
}

} // namespace

Geodesic shoot_geodesic(const ProfileMetric& m, Point start, double angle,
                        double length, const GeodesicOptions& opts) {
    if (!(opts.step > 0.0)) throw ArgumentError("shoot_geodesic: step <= 0");
    if (!(m.fiber(start.x) > 0.0)) {
        throw DomainError("shoot_geodesic: metric not positive at start");
    }

    Geodesic g;
    g.start = start;
    g.angle = angle;

    State y = initial_state(m, start, angle);
    g.clairaut = m.fiber(y.x) * y.vth;

    const int n_steps = std::max(1, static_cast<int>(std::ceil(length / opts.step)));
    const double h = length / n_steps;

    double s = 0.0;
    g.samples.push_back({s, y.x, y.theta, y.vx, y.vth});
    for (int i = 0; i < n_steps; ++i) {
        y = rk4_step(m, y, h);
        s += h;
        if (std::abs(y.x) > opts.domain_limit) {
            g.left_domain = true;
            break;
        }
        if ((i + 1) % opts.sample_stride == 0 || i + 1 == n_steps) {
            g.samples.push_back({s, y.x, y.theta, y.vx, y.vth});
        }
    }
    if (g.samples.back().s != s) {
        g.samples.push_back({s, y.x, y.theta, y.vx, y.vth});
    }
    g.end = g.samples.back();
    return g;
}

Geodesic shoot_geodesic(const WarpedMetric& m, Point start, double angle,
                        double length, const GeodesicOptions& opts) {
    return shoot_geodesic(ProfileMetric::from_warped(m), start, angle, length,
                          opts);
}

ThetaCrossing integrate_to_theta(const ProfileMetric& m, Point start,
                                 double angle, double dtheta_target,
                                 double budget, const GeodesicOptions& opts) {
    ThetaCrossing res;
    if (!(dtheta_target > 0.0)) {
        throw ArgumentError("integrate_to_theta: target must be positive");
    }

    State y = initial_state(m, start, angle);
    if (!(y.vth > 0.0)) {
        res.last = {0.0, y.x, y.theta, y.vx, y.vth};
        return res; // never crosses: cover angle not increasing
    }

    const double target = start.theta + dtheta_target;
    const double h = opts.step;
    double s = 0.0;
    while (s < budget) {
        const State y0 = y;
        y = rk4_step(m, y, h);
        s += h;
        if (y.theta >= target) {
            // Locate the crossing inside [y0, y] by Hermite interpolation;
            // theta is strictly monotone so Newton from a midpoint is safe.
            const State d0 = deriv(m, y0);
            const State d1 = deriv(m, y);
            double t = (target - y0.theta) / (y.theta - y0.theta);
            for (int it = 0; it < 30; ++it) {
                const double th = hermite(y0.theta, y.theta, d0.theta, d1.theta, h, t);
                const double dth =
                    (hermite(y0.theta, y.theta, d0.theta, d1.theta, h,
                             std::min(1.0, t + 1e-7)) -
                     th) / 1e-7;
                const double delta = (th - target) / (dth != 0.0 ? dth : 1.0);
                t -= delta;
                t = std::clamp(t, 0.0, 1.0);
                if (std::abs(delta) < 1e-14) break;
            }
            res.crossed = true;
            res.s = s - h + t * h;
            res.x = hermite(y0.x, y.x, d0.x, d1.x, h, t);
            res.vx = hermite(y0.vx, y.vx, d0.vx, d1.vx, h, t);
            res.vtheta = hermite(y0.vth, y.vth, d0.vth, d1.vth, h, t);
            return res;
        }
        if (std::abs(y.x) > opts.domain_limit) {
            res.left_domain = true;
            break;
        }
    }
    res.last = {s, y.x, y.theta, y.vx, y.vth};
    return res;
}

GeodesicDrift geodesic_drift(const ProfileMetric& m, const Geodesic& g) {
    GeodesicDrift d;
    for (const auto& st : g.samples) {
        const double a = m.radial(st.x);
        const double b = m.fiber(st.x);
        const double speed = a * st.vx * st.vx + b * st.vtheta * st.vtheta;
        d.speed = std::max(d.speed, std::abs(speed - 1.0));
        d.clairaut = std::max(d.clairaut, std::abs(b * st.vtheta - g.clairaut));
    }
    return d;
}

} // namespace geolab
