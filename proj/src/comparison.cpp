#include "geolab/comparison.hpp"
#include "geolab/error.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace geolab {
namespace {

// Composite Simpson of fn over [0, b] with n subintervals.
template <typename F>
double simpson(const F& fn, double b, int n) {
    if (n % 2 != 0) ++n;
    const double h = b / n;
    double acc = fn(0.0) + fn(b);
    for (int i = 1; i < n; ++i) {
        acc += fn(i * h) * ((i % 2 != 0) ? 4.0 : 2.0);
    }
    return acc * h / 3.0;
}

// Coordinate Hessian and gradient of rho(p0, .) at q by central
// differences; theta steps are metric-normalized so both directions
// difference over comparable arclength.
struct DistanceJet {
    double rho;
    std::array<double, 2> grad;                // d_x, d_theta
    std::array<std::array<double, 2>, 2> hess; // coordinate second partials
};

DistanceJet distance_jet(const WarpedMetric& m, Point p0, Point q, double step,
                         const DistanceOptions& opts) {
    const double dx = step;
    const double dth = step / std::sqrt(m.fiber(q.x));
    auto rho = [&](double x, double th) {
        return distance(m, p0, Point{x, th}, opts).value;
    };

    DistanceJet j;
    const double c = rho(q.x, q.theta);
    const double xp = rho(q.x + dx, q.theta), xm = rho(q.x - dx, q.theta);
    const double tp = rho(q.x, q.theta + dth), tm = rho(q.x, q.theta - dth);
    const double pp = rho(q.x + dx, q.theta + dth);
    const double pm = rho(q.x + dx, q.theta - dth);
    const double mp = rho(q.x - dx, q.theta + dth);
    const double mm = rho(q.x - dx, q.theta - dth);

    j.rho = c;
    j.grad = {(xp - xm) / (2 * dx), (tp - tm) / (2 * dth)};
    j.hess[0][0] = (xp - 2 * c + xm) / (dx * dx);
    j.hess[1][1] = (tp - 2 * c + tm) / (dth * dth);
    j.hess[0][1] = j.hess[1][0] = (pp - pm - mp + mm) / (4 * dx * dth);
    return j;
}

} // namespace

ComparisonReport hessian_comparison_check(double k0, double rho,
                                          int quadrature_n) {
    if (!(k0 > 0.0)) throw DomainError("hessian_comparison_check: k0 <= 0");
    const double limit = std::numbers::pi / (4.0 * std::sqrt(k0));
    if (!(rho > 0.0) || rho > limit * (1.0 + 1e-12)) {
        throw DomainError(
            "hessian_comparison_check: rho outside (0, pi/(4 sqrt(k0))]");
    }

    ComparisonReport rep;
    rep.rho = rho;
    rep.k0 = k0;
    const double rk = std::sqrt(k0);
    const double sr = std::sin(rk * rho);
    rep.profile_value = rk * std::sin(2.0 * rk * rho) / (2.0 * sr * sr);
    rep.lower_bound = std::numbers::pi / (4.0 * rho);

    // Energy of the model Jacobi field f(s) = sin(rk s)/sin(rk rho).
    auto integrand = [&](double s) {
        const double f = std::sin(rk * s) / sr;
        const double df = rk * std::cos(rk * s) / sr;
        return df * df - k0 * f * f;
    };
    rep.profile_quadrature = simpson(integrand, rho, quadrature_n);
    return rep;
}

double measured_hessian_orthogonal(const WarpedMetric& m, Point p0, Point q,
                                   double step, const DistanceOptions& opts) {
    auto cands =
        distance_candidates(ProfileMetric::from_warped(m), p0, q, opts);
    if (cands.empty()) {
        throw ConvergenceError("measured_hessian_orthogonal: no geodesic found");
    }
    const auto& best = cands.front();

    // Unit direction orthogonal to the arriving tangent (tx, tth).
    const double b = m.fiber(q.x);
    const double tx = best.arrival_vx;
    const double tth = best.arrival_vtheta;
    const double xx = -std::sqrt(b) * tth; // X components in (d_x, d_theta)
    const double xth = tx / std::sqrt(b);

    const auto jet = distance_jet(m, p0, q, step, opts);
    const auto gamma = m.christoffels(q.x);

    // Covariant Hessian: H_ij = d_i d_j rho - Gamma^k_ij d_k rho.
    const double h11 =
        jet.hess[0][0] - gamma.g111 * jet.grad[0] - gamma.g211 * jet.grad[1];
    const double h12 =
        jet.hess[0][1] - gamma.g112 * jet.grad[0] - gamma.g212 * jet.grad[1];
    const double h22 =
        jet.hess[1][1] - gamma.g122 * jet.grad[0] - gamma.g222 * jet.grad[1];

    return xx * xx * h11 + 2.0 * xx * xth * h12 + xth * xth * h22;
}

MetricSampler sampler_from_warped(const WarpedMetric& m) {
    return [m](Point p) {
        MetricAtPoint mp;
        mp.g11 = m.g11(p.x);
        mp.g22 = m.g22(p.x);
        mp.gamma = m.christoffels(p.x);
        return mp;
    };
}

MetricSampler scaled_sampler(const WarpedMetric& m, double factor) {
    if (!(factor > 0.0)) throw DomainError("scaled_sampler: factor <= 0");
    return [m, factor](Point p) {
        MetricAtPoint mp;
        mp.g11 = factor * m.g11(p.x);
        mp.g22 = factor * m.g22(p.x);
        mp.gamma = m.christoffels(p.x); // homothety preserves Christoffels
        return mp;
    };
}

LaplacianReport laplacian_of_distance(const WarpedMetric& g0,
                                      const MetricSampler& gt, Point p0,
                                      Point q, double t, double bound_c,
                                      double step, const DistanceOptions& opts) {
    const auto d = distance(g0, p0, q, opts);
    if (d.near_cut) {
        throw CutLocusError("laplacian_of_distance: q is flagged near Cut(p0)");
    }

    const auto jet = distance_jet(g0, p0, q, step, opts);
    const auto g0c = g0.christoffels(q.x);
    const auto mt = gt(q);

    // Covariant Hessian with respect to g(0); the off-diagonal component
    // drops out against diagonal inverse metrics.
    const double h11 =
        jet.hess[0][0] - g0c.g111 * jet.grad[0] - g0c.g211 * jet.grad[1];
    const double h22 =
        jet.hess[1][1] - g0c.g122 * jet.grad[0] - g0c.g222 * jet.grad[1];

    const double inv11 = 1.0 / mt.g11;
    const double inv22 = 1.0 / mt.g22;

    const double c11 = (mt.gamma.g111 - g0c.g111) * jet.grad[0] +
                       (mt.gamma.g211 - g0c.g211) * jet.grad[1];
    const double c22 = (mt.gamma.g122 - g0c.g122) * jet.grad[0] +
                       (mt.gamma.g222 - g0c.g222) * jet.grad[1];

    LaplacianReport rep;
    rep.rho = jet.rho;
    rep.value = inv11 * (h11 - c11) + inv22 * (h22 - c22);
    rep.value_initial =
        (1.0 / g0.g11(q.x)) * h11 + (1.0 / g0.g22(q.x)) * h22;
    rep.correction = std::abs(inv11 * c11) + std::abs(inv22 * c22);
    rep.within_upper = rep.value <= bound_c * (1.0 + 1.0 / jet.rho) + 1e-9;
    rep.within_lower =
        rep.value >= -bound_c * std::sqrt(std::max(t, 0.0)) - 1e-9;
    return rep;
}

} // namespace geolab
