#include "geolab/gauge.hpp"
#include "geolab/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace geolab {
namespace {

// Cumulative integral of `rate` over a uniform grid, per-cell Simpson.
std::vector<double> cumulative(const std::function<double(double)>& rate,
                               const std::vector<double>& nodes) {
    std::vector<double> acc(nodes.size(), 0.0);
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        const double a = nodes[i - 1], b = nodes[i];
        const double m = 0.5 * (a + b);
        acc[i] = acc[i - 1] + (b - a) / 6.0 * (rate(a) + 4.0 * rate(m) + rate(b));
    }
    return acc;
}

std::vector<double> uniform(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) {
        v[i] = lo + (hi - lo) * i / (n - 1);
    }
    return v;
}

} // namespace

double GaugeTransform::conformal_factor(double w) const {
    return std::exp(2.0 * u_of_w(w));
}

GaugeTransform gauge_transform(const WarpedMetric& metric, double x_lo,
                               double x_hi, int nodes, double anchor_x,
                               double anchor_w) {
    if (!(x_hi > x_lo) || nodes < 3) {
        throw ArgumentError("gauge_transform: bad range or node count");
    }
    auto rate = [&](double x) {
        const double f = metric.fiber(x);
        if (!(f > 0.0)) {
            throw GaugeError("gauge_transform: warp non-positive at x=" +
                             std::to_string(x));
        }
        return 1.0 / std::sqrt(f);
    };

    GaugeTransform g;
    g.x_nodes = uniform(x_lo, x_hi, nodes);
    g.w_nodes = cumulative(rate, g.x_nodes);

    // Pin w(anchor_x) = anchor_w; anchors outside the range fall back to
    // the left endpoint.
    double shift = anchor_w;
    if (anchor_x > x_lo && anchor_x < x_hi) {
        MonotoneCubic raw(g.x_nodes, g.w_nodes);
        shift = anchor_w - raw(anchor_x);
    }
    for (double& w : g.w_nodes) w += shift;

    g.u_nodes.resize(g.x_nodes.size());
    for (std::size_t i = 0; i < g.x_nodes.size(); ++i) {
        g.u_nodes[i] = 0.5 * std::log(metric.fiber(g.x_nodes[i]));
    }

    g.w_of_x = MonotoneCubic(g.x_nodes, g.w_nodes);
    g.x_of_w = MonotoneCubic(g.w_nodes, g.x_nodes);
    g.u_of_w = MonotoneCubic(g.w_nodes, g.u_nodes);
    return g;
}

GaugeTransform gauge_transform_inverse(const std::function<double(double)>& u,
                                       double w_lo, double w_hi, int nodes,
                                       double anchor_w, double anchor_x) {
    if (!(w_hi > w_lo) || nodes < 3) {
        throw ArgumentError("gauge_transform_inverse: bad range or node count");
    }
    auto rate = [&](double w) {
        const double e = std::exp(u(w));
        if (!std::isfinite(e) || e <= 0.0) {
            throw GaugeError("gauge_transform_inverse: e^u not positive");
        }
        return e;
    };

    GaugeTransform g;
    g.w_nodes = uniform(w_lo, w_hi, nodes);
    g.x_nodes = cumulative(rate, g.w_nodes);

    double shift = anchor_x;
    if (anchor_w > w_lo && anchor_w < w_hi) {
        MonotoneCubic raw(g.w_nodes, g.x_nodes);
        shift = anchor_x - raw(anchor_w);
    }
    for (double& x : g.x_nodes) x += shift;

    g.u_nodes.resize(g.w_nodes.size());
    for (std::size_t i = 0; i < g.w_nodes.size(); ++i) {
        g.u_nodes[i] = u(g.w_nodes[i]);
    }

    for (std::size_t i = 1; i < g.x_nodes.size(); ++i) {
        if (!(g.x_nodes[i] > g.x_nodes[i - 1])) {
            throw GaugeError("gauge_transform_inverse: non-monotone map");
        }
    }

    g.w_of_x = MonotoneCubic(g.x_nodes, g.w_nodes);
    g.x_of_w = MonotoneCubic(g.w_nodes, g.x_nodes);
    g.u_of_w = MonotoneCubic(g.w_nodes, g.u_nodes);
    return g;
}

WarpFunction warp_from_gauge(const GaugeTransform& gauge,
                             const std::string& name) {
    auto f = [gauge](double x) {
        return std::exp(2.0 * gauge.u_of_w(gauge.w_of_x(x)));
    };
    return warps::from_function(f, name);
}

} // namespace geolab
