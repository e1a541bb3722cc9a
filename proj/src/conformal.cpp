#include "geolab/conformal.hpp"
#include "geolab/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace geolab {

SmoothedConformalFactor::SmoothedConformalFactor(const SmoothedDistance& sd,
                                                 double fd_step)
    : sd_(sd), step_(fd_step > 0.0 ? fd_step : 1e-2 * sd.radius()),
      scale_(4.0 * std::sqrt(sd.curvature_bound())) {}

double SmoothedConformalFactor::value(Point p) const {
    return scale_ * sd_.evaluate(p).truncated;
}

FrameJet SmoothedConformalFactor::jet(Point p) const {
    auto fn = [this](Point q) { return scale_ * sd_.evaluate(q).truncated; };
    return covariant_scalar_jet(fn, sd_.metric(), p, step_);
}

SyntheticFactor::SyntheticFactor(
    const WarpedMetric& base, std::function<double(Point)> psi,
    std::function<std::array<double, 2>(Point)> grad,
    std::function<std::array<double, 3>(Point)> hess)
    : base_(base), psi_(std::move(psi)), grad_(std::move(grad)),
      hess_(std::move(hess)) {}

FrameJet SyntheticFactor::jet(Point p) const {
    return frame_jet_from_partials(base_, p, psi_(p), grad_(p), hess_(p));
}

Christoffels conformal_christoffels(const WarpedMetric& base, Point p,
                                    const std::array<double, 2>& grad_psi) {
    const auto g = base.christoffels(p.x);
    const double g11 = base.g11(p.x);
    const double g22 = base.g22(p.x);
    const double px = grad_psi[0], pt = grad_psi[1];

    // Gamma^k_ij + (delta^k_i d_j psi + delta^k_j d_i psi
    //              - g^{kl} g_ij d_l psi) / 2, diagonal metric.
    Christoffels c = g;
    c.g111 += 0.5 * (px + px - (1.0 / g11) * g11 * px);
    c.g112 += 0.5 * (pt + 0.0 - 0.0);
    c.g122 += 0.5 * (0.0 + 0.0 - (1.0 / g11) * g22 * px);
    c.g211 += 0.5 * (0.0 + 0.0 - (1.0 / g22) * g11 * pt);
    c.g212 += 0.5 * (px + 0.0 - 0.0);
    c.g222 += 0.5 * (pt + pt - (1.0 / g22) * g22 * pt);
    return c;
}

ConformalCurvature conformal_curvature(const WarpedMetric& base, Point p,
                                       const FrameJet& factor) {
    const double h11 = base.g11(p.x);
    const double h22 = base.g22(p.x);
    const double inv11 = 1.0 / h11, inv22 = 1.0 / h22;
    const double rf = std::sqrt(h22); // frame scale of d_theta

    // Coordinate gradient and covariant Hessian from the frame jet.
    const double p1 = factor.g1;
    const double p2 = factor.g2 * rf;
    const double c11 = factor.h11;
    const double c22 = factor.h22 * h22;

    const double grad_sq = inv11 * p1 * p1 + inv22 * p2 * p2;
    const double base_r1212 = curvature_bundle(base, p.x).r1212;

    // (1,2,1,2) component of the rescaled curvature with e^{psi} factored
    // out; diagonal metric, so the h_12 cross terms vanish.
    const double bracket = -grad_sq * h11 * h22 -
                           (2.0 * c22 - p2 * p2) * h11 -
                           (2.0 * c11 - p1 * p1) * h22;
    const double over_exp = base_r1212 + 0.25 * bracket;

    ConformalCurvature out;
    out.r1212_over_exp = over_exp;
    out.rm_ratio = std::numbers::sqrt2 * std::abs(inv11 * inv22 * over_exp);
    out.rm_rescaled = out.rm_ratio * std::exp(-factor.value);
    return out;
}

double direct_rescaled_r1212_over_exp(const WarpedMetric& base,
                                      const std::function<double(Point)>& psi,
                                      Point p, double fd_step) {
    auto comps = rescaled_components(base, psi);
    const double k = gauss_curvature_of_components(comps, p, fd_step);
    const auto c = comps(p);
    // r1212 = K det(g); dividing by e^{psi} once leaves e^{psi} det(h).
    return k * c[0] * c[1] * std::exp(-psi(p));
}

MetricComponents rescaled_components(const WarpedMetric& base,
                                     const std::function<double(Point)>& psi) {
    auto f = base.warp().eval;
    return [f, psi](Point p) -> std::array<double, 2> {
        const double e = std::exp(psi(p));
        return {e, e * f(p.x)};
    };
}

DecayReport decay_check(const WarpedMetric& base, const SmoothedDistance& sd,
                        const std::vector<double>& a_values,
                        const std::vector<Point>& samples,
                        bool with_loop_proxy) {
    const double k0 = sd.curvature_bound();
    const double threshold =
        std::max(1.0, 3.0 * std::numbers::pi / (4.0 * std::sqrt(k0)));
    for (double a : a_values) {
        if (a < threshold) {
            throw ArgumentError("decay_check: a below max(1, 3 pi/(4 sqrt(k0)))");
        }
    }
    if (a_values.empty() || samples.empty()) {
        throw ArgumentError("decay_check: empty scales or samples");
    }

    const double scale = 4.0 * std::sqrt(k0);
    CutoffProfile cut;
    const double step = 1e-2 * sd.radius();

    DecayReport rep;
    double spread_lo = std::numeric_limits<double>::infinity();
    double spread_hi = 0.0;

    for (double a : a_values) {
        auto psi_a = [&, a](Point q) {
            const double rb = sd.evaluate(q).smoothed;
            return scale * rb * (1.0 - cut.eta(rb / a));
        };

        double max_ratio = 0.0;
        DecayRow* proxy_row = nullptr;
        double proxy_psi = std::numeric_limits<double>::infinity();
        const std::size_t row0 = rep.rows.size();

        for (const Point& y : samples) {
            const auto jet = covariant_scalar_jet(psi_a, base, y, step);
            const auto cc = conformal_curvature(base, y, jet);
            DecayRow row;
            row.a = a;
            row.sample = y;
            row.psi = jet.value;
            row.rm_ratio = cc.rm_ratio;
            row.rm_rescaled = cc.rm_rescaled;
            row.fiber_scale = std::exp(0.5 * jet.value);
            rep.rows.push_back(row);
            max_ratio = std::max(max_ratio, cc.rm_ratio);
        }
        spread_lo = std::min(spread_lo, max_ratio);
        spread_hi = std::max(spread_hi, max_ratio);

        if (with_loop_proxy) {
            // Run the loop search where the exponent is smallest but
            // nonzero; gigantic rescalings are reported through the
            // algebraic fiber factor instead.
            for (std::size_t i = row0; i < rep.rows.size(); ++i) {
                DecayRow& r = rep.rows[i];
                if (r.psi > 1e-8 && r.psi < proxy_psi && r.psi < 12.0) {
                    proxy_psi = r.psi;
                    proxy_row = &r;
                }
            }
            if (proxy_row) {
                const Point y = proxy_row->sample;
                // 1D slice of psi_a along x at the sample's theta.
                const int n = 33;
                const double halfw = 1.6;
                std::vector<double> xs(n), ps(n);
                for (int i = 0; i < n; ++i) {
                    xs[i] = y.x - halfw + 2.0 * halfw * i / (n - 1);
                    ps[i] = psi_a({xs[i], y.theta});
                }
                MonotoneCubic psi_slice(xs, ps);
                auto warp = base.warp();
                ProfileMetric rescaled;
                rescaled.radial = [psi_slice](double x) {
                    return std::exp(psi_slice(x));
                };
                rescaled.radial_d1 = [psi_slice](double x) {
                    const double h = 1e-4;
                    return (std::exp(psi_slice(x + h)) -
                            std::exp(psi_slice(x - h))) / (2.0 * h);
                };
                rescaled.fiber = [psi_slice, warp](double x) {
                    return std::exp(psi_slice(x)) * warp.eval(x);
                };
                rescaled.fiber_d1 = [psi_slice, warp](double x) {
                    const double h = 1e-4;
                    return (std::exp(psi_slice(x + h)) * warp.eval(x + h) -
                            std::exp(psi_slice(x - h)) * warp.eval(x - h)) /
                           (2.0 * h);
                };
                DistanceOptions lopts;
                lopts.domain_limit = y.x + halfw;
                const auto base_loop = loop_injectivity_bound(
                    ProfileMetric::from_warped(base), y, lopts);
                const auto resc_loop =
                    loop_injectivity_bound(rescaled, y, lopts);
                if (base_loop && resc_loop) {
                    proxy_row->loop_ratio = *resc_loop / *base_loop;
                }
            }
        }
    }

    rep.ratio_spread = (spread_lo > 0.0) ? spread_hi / spread_lo
                                         : std::numeric_limits<double>::infinity();
    rep.uniform_within_2x = rep.ratio_spread <= 2.0;
    return rep;
}

} // namespace geolab
