#include "geolab/mollify.hpp"
#include "geolab/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>

namespace geolab {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::uint64_t point_key(Point p) {
    const auto a = std::bit_cast<std::uint64_t>(p.x);
    const auto b = std::bit_cast<std::uint64_t>(p.theta);
    return a ^ (b * 0x9e3779b97f4a7c15ULL + (b >> 7));
}

// Kernel normalization on the plane: psi = c * eta(|v|) with
// int_{R^2} psi(|v|) dv = 1, i.e. c = 1 / (2 pi * int_0^1 eta(r) r dr).
// The radial integral uses the same midpoint rule as the caller so the
// discrete convolution of the constant 1 is exactly 1.
double kernel_radial_mass(int radial_nodes) {
    CutoffProfile cut;
    double acc = 0.0;
    for (int k = 0; k < radial_nodes; ++k) {
        const double s = (k + 0.5) / radial_nodes;
        acc += cut.eta(s) * s;
    }
    return acc / radial_nodes;
}

struct BallNode {
    Point z;        // canonical position (theta in [0, 2pi))
    double weight;  // measure weight sqrt(f) dx dtheta
    double rho;     // distance from the ball center (or an upper bound)
    bool plateau;   // rho <= radius/2 certified; kernel value is exactly 1
};

struct BallSpec {
    double radius = 0.0;       // kernel support radius
    double lattice_dx = 0.0;   // global x lattice spacing
    double box_factor = 1.05;
    int max_winding = 2;
    double domain_limit = 20.0;
    DistanceOptions bvp;
};

// Quadrature nodes of the ball B(y, radius) on the fixed global lattice,
// with the distance to y attached. Columns are processed independently;
// within a column the winding-class root searches are warm-started from
// the previous node.
std::vector<BallNode> collect_ball_nodes(const WarpedMetric& m,
                                         const ProfileMetric& pm, Point y,
                                         const BallSpec& spec) {
    const double r = spec.radius;
    const double half = spec.box_factor * r;
    const double dx = spec.lattice_dx;

    // Smallest fiber over the reachable window bounds theta extents.
    double f_min = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 16; ++i) {
        const double x = y.x - half + 2.0 * half * i / 16.0;
        f_min = std::min(f_min, m.fiber(x));
    }

    const long i_lo = static_cast<long>(std::ceil((y.x - half) / dx));
    const long i_hi = static_cast<long>(std::floor((y.x + half) / dx));

    auto process_columns = [&](long ia, long ib) {
        std::vector<BallNode> out;
        for (long i = ia; i <= ib; ++i) {
            const double xz = i * dx;
            const double ddx = xz - y.x;
            if (std::abs(ddx) > r) continue; // distance >= |dx| > support
            const double fz = m.fiber(xz);

            // Global theta lattice for this column: power-of-two count so
            // the node set is independent of the query point.
            const double want = kTwoPi * std::sqrt(fz) / dx;
            int level = 3;
            while ((1 << level) < want && level < 22) ++level;
            const long n_th = 1L << level;
            const double dth = kTwoPi / n_th;

            double th_half = r * 1.02 / std::sqrt(f_min);
            th_half = std::min(th_half, std::numbers::pi);
            long j_lo, j_hi;
            if (th_half >= std::numbers::pi) {
                j_lo = static_cast<long>(
                    std::ceil((y.theta - std::numbers::pi) / dth));
                j_hi = j_lo + n_th - 1;
            } else {
                j_lo = static_cast<long>(std::ceil((y.theta - th_half) / dth));
                j_hi = static_cast<long>(std::floor((y.theta + th_half) / dth));
            }

            std::array<std::optional<double>, 16> hints; // per winding class
            for (long j = j_lo; j <= j_hi; ++j) {
                const double th = j * dth;   // unwrapped around y.theta
                const double dthw = th - y.theta;

                double best_lb = std::numeric_limits<double>::infinity();
                double best_ub = std::numeric_limits<double>::infinity();
                std::vector<int> classes;
                for (int w = -spec.max_winding; w <= spec.max_winding; ++w) {
                    const double d = dthw + kTwoPi * w;
                    const double lb =
                        std::sqrt(ddx * ddx + f_min * d * d);
                    if (lb > r * 1.02) continue;
                    classes.push_back(w);
                    best_lb = std::min(best_lb, lb);
                    const double ub =
                        std::abs(ddx) +
                        std::abs(d) * std::sqrt(std::min(fz, m.fiber(y.x)));
                    best_ub = std::min(best_ub, ub);
                }
                if (classes.empty()) continue;

                BallNode node;
                node.z = Point{xz, th - kTwoPi * std::floor(th / kTwoPi)};
                node.weight = std::sqrt(fz) * dx * dth;

                if (best_ub <= 0.5 * r) {
                    node.rho = best_ub;
                    node.plateau = true;
                    out.push_back(node);
                    continue;
                }

                double rho = std::numeric_limits<double>::infinity();
                for (int w : classes) {
                    const double d = dthw + kTwoPi * w;
                    if (std::abs(d) < 1e-12) {
                        rho = std::min(rho, std::abs(ddx));
                        continue;
                    }
                    auto& hint = hints[static_cast<std::size_t>(
                        w + spec.max_winding)];
                    auto roots = solve_winding_class(pm, y, xz, std::abs(d),
                                                     spec.bvp, hint);
                    for (const auto& c : roots) {
                        rho = std::min(rho, c.length);
                    }
                    if (!roots.empty()) hint = roots.front().angle;
                }
                if (!std::isfinite(rho)) {
                    // All pruned classes failed to bracket; fall back to
                    // the full solver once.
                    rho = distance(pm, y, node.z, spec.bvp).value;
                }
                if (rho > r) continue;
                node.rho = rho;
                node.plateau = false;
                out.push_back(node);
            }
        }
        return out;
    };

    // Two column chunks in flight; evaluations are pure.
    const long mid = i_lo + (i_hi - i_lo) / 2;
    auto right = std::async(std::launch::async, process_columns, mid + 1, i_hi);
    std::vector<BallNode> nodes = process_columns(i_lo, mid);
    auto rest = right.get();
    nodes.insert(nodes.end(), rest.begin(), rest.end());
    return nodes;
}

} // namespace

double green_wu_convolve(const ScalarField& fn, Point p, double eps,
                         const WarpedMetric& m, const GreenWuOptions& opts) {
    if (!(eps > 0.0)) throw DomainError("green_wu_convolve: eps <= 0");
    if (std::abs(p.x) + eps > opts.domain_limit) {
        throw DomainError("green_wu_convolve: kernel support leaves the domain");
    }
    CutoffProfile cut;

    if (opts.form == ConvolutionForm::tangent) {
        const int nr = opts.radial_nodes;
        const int na = opts.angular_nodes;
        const double c_norm = 1.0 / (kTwoPi * kernel_radial_mass(nr));

        const auto pm = ProfileMetric::from_warped(m);
        GeodesicOptions go;
        go.step = eps / (2.0 * nr);
        go.domain_limit = opts.domain_limit;
        go.sample_stride = 1;
        const double s_len = eps * (nr - 0.5) / nr;

        double acc = 0.0;
        for (int a = 0; a < na; ++a) {
            const double phi = kTwoPi * (a + 0.5) / na;
            const Geodesic g = shoot_geodesic(pm, p, phi, s_len, go);
            // samples sit at multiples of eps/(2 nr); radial midpoints are
            // the odd indices.
            for (int k = 0; k < nr; ++k) {
                const std::size_t idx = static_cast<std::size_t>(2 * k + 1);
                if (idx >= g.samples.size()) break;
                const auto& st = g.samples[idx];
                const double s = (k + 0.5) / nr;
                acc += fn(Point{st.x, st.theta}) * c_norm * cut.eta(s) * s;
            }
        }
        return acc * kTwoPi / (na * nr);
    }

    // Manifold representation: eps^-2 int fn(z) psi(rho(p,z)/eps) dz with
    // the kernel of the true distance; no self-normalization.
    const double c_norm = 1.0 / (kTwoPi * kernel_radial_mass(4096));
    BallSpec spec;
    spec.radius = eps;
    spec.lattice_dx = 2.0 * 1.05 * eps / 48.0;
    spec.bvp = opts.short_bvp;
    spec.bvp.fast_mode = true;
    spec.domain_limit = opts.domain_limit;
    const auto pm = ProfileMetric::from_warped(m);
    const auto nodes = collect_ball_nodes(m, pm, p, spec);

    double acc = 0.0;
    for (const auto& n : nodes) {
        const double psi = c_norm * (n.plateau ? 1.0 : cut.eta(n.rho / eps));
        acc += fn(n.z) * psi * n.weight;
    }
    return acc / (eps * eps);
}

SmoothedDistance::SmoothedDistance(const WarpedMetric& m,
                                   std::shared_ptr<const DistanceField> field,
                                   double curvature_bound, double truncation_a,
                                   SmoothedDistanceOptions opts)
    : metric_(m), field_(std::move(field)), k0_(curvature_bound),
      a_(truncation_a), opts_(opts) {
    if (!(k0_ > 0.0)) throw DomainError("SmoothedDistance: k0 <= 0");
    if (!(a_ >= 1.0)) throw DomainError("SmoothedDistance: a < 1");
    if (!field_) throw ArgumentError("SmoothedDistance: missing base field");
    k1_ = std::numbers::pi / (4.0 * std::sqrt(k0_));
    lattice_dx_ = 2.0 * opts_.box_factor * k1_ / opts_.nodes_across;

    // Short-BVP defaults tuned for sub-k1 arcs.
    opts_.short_bvp.fast_mode = true;
    opts_.short_bvp.step = std::min(4e-3, k1_ / 48.0);
    opts_.short_bvp.sweep_step = 4.0 * opts_.short_bvp.step;
    opts_.short_bvp.budget_pad = 1.0;
    opts_.short_bvp.sweep_angles = 16;
    opts_.short_bvp.domain_limit = opts_.domain_limit;
}

SmoothedDistanceValue SmoothedDistance::evaluate(Point y) const {
    const std::uint64_t key = point_key(y);
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    const SmoothedDistanceValue v = evaluate_uncached(y);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    cache_.emplace(key, v);
    return v;
}

SmoothedDistanceValue SmoothedDistance::evaluate_uncached(Point y) const {
    if (std::abs(y.x) + opts_.box_factor * k1_ > opts_.domain_limit) {
        throw DomainError("SmoothedDistance: point too close to the domain edge");
    }

    BallSpec spec;
    spec.radius = k1_;
    spec.lattice_dx = lattice_dx_;
    spec.box_factor = opts_.box_factor;
    spec.max_winding = opts_.max_winding;
    spec.domain_limit = opts_.domain_limit;
    spec.bvp = opts_.short_bvp;

    const auto pm = ProfileMetric::from_warped(metric_);
    const auto nodes = collect_ball_nodes(metric_, pm, y, spec);

    double num = 0.0, den = 0.0;
    for (const auto& n : nodes) {
        const double w =
            (n.plateau ? 1.0 : cut_.eta(n.rho / k1_)) * n.weight;
        if (w <= 0.0) continue;
        num += w * (*field_)(n.z);
        den += w;
    }

    const double floor = opts_.denom_floor * std::numbers::pi * k1_ * k1_;
    if (!(den > floor)) {
        throw IntegrationError("SmoothedDistance: quadrature mass below floor");
    }

    SmoothedDistanceValue v;
    v.smoothed = num / den;
    v.truncated = v.smoothed * (1.0 - cut_.eta(v.smoothed / a_));

    const double rho_y = (*field_)(y);
    if (v.smoothed < rho_y - k1_ - opts_.sandwich_slack ||
        v.smoothed > rho_y + k1_ + opts_.sandwich_slack) {
        throw IntegrationError("SmoothedDistance: sandwich bound violated");
    }
    return v;
}

DerivativeBoundReport scalar_derivative_report(
    const ScalarField& fn, const ScalarField& rho_of, const WarpedMetric& h,
    std::span<const Point> samples, double step) {
    DerivativeBoundReport rep;
    const double d = step;

    for (const Point& y : samples) {
        double c, xp, xm, tp, tm, pp, pmv, mp, mm;
        try {
            const double dth0 = d / std::sqrt(h.fiber(y.x));
            const double dthp = d / std::sqrt(h.fiber(y.x + d));
            const double dthm = d / std::sqrt(h.fiber(y.x - d));
            c = fn(y);
            xp = fn({y.x + d, y.theta});
            xm = fn({y.x - d, y.theta});
            tp = fn({y.x, y.theta + dth0});
            tm = fn({y.x, y.theta - dth0});
            pp = fn({y.x + d, y.theta + dthp});
            pmv = fn({y.x + d, y.theta - dthp});
            mp = fn({y.x - d, y.theta + dthm});
            mm = fn({y.x - d, y.theta - dthm});
        } catch (const DomainError&) {
            rep.skipped.push_back(y);
            continue;
        }

        // Metric-normalized steps make frame derivatives plain central
        // differences; curvature enters through the frame bracket terms.
        const double u1 = (xp - xm) / (2 * d);
        const double u2 = (tp - tm) / (2 * d);
        const double h11 = (xp - 2 * c + xm) / (d * d);
        const double e2u_p = (pp - pmv) / (2 * d);
        const double e2u_m = (mp - mm) / (2 * d);
        const double h12 = (e2u_p - e2u_m) / (2 * d);
        const double fib = h.fiber(y.x);
        const double h22 =
            (tp - 2 * c + tm) / (d * d) + 0.5 * h.fiber_d1(y.x) / fib * u1;

        DerivativeSample s;
        s.y = y;
        s.rho = rho_of(y);
        s.grad_norm = std::sqrt(u1 * u1 + u2 * u2);
        s.hess_norm = std::sqrt(h11 * h11 + 2 * h12 * h12 + h22 * h22);
        rep.samples.push_back(s);
    }

    for (const auto& s : rep.samples) {
        rep.grad_max = std::max(rep.grad_max, s.grad_norm);
        rep.hess_max = std::max(rep.hess_max, s.hess_norm);
    }

    // Least-squares slopes of the norms against rho.
    auto slope = [&](auto value) {
        const std::size_t n = rep.samples.size();
        if (n < 2) return 0.0;
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const auto& s : rep.samples) {
            sx += s.rho;
            sy += value(s);
            sxx += s.rho * s.rho;
            sxy += s.rho * value(s);
        }
        const double denom = n * sxx - sx * sx;
        return denom != 0.0 ? (n * sxy - sx * sy) / denom : 0.0;
    };
    rep.grad_slope = slope([](const DerivativeSample& s) { return s.grad_norm; });
    rep.hess_slope = slope([](const DerivativeSample& s) { return s.hess_norm; });
    return rep;
}

DerivativeBoundReport derivative_bound_report(const SmoothedDistance& sd,
                                              std::span<const Point> samples,
                                              const WarpedMetric& h,
                                              double step) {
    if (step <= 0.0) step = 1e-2 * sd.radius();
    auto fn = [&sd](Point y) { return sd.evaluate(y).truncated; };
    auto rho = [&sd](Point y) { return sd.base_field()(y); };
    return scalar_derivative_report(fn, rho, h, samples, step);
}

} // namespace geolab
