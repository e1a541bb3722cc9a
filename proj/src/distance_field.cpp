#include "geolab/distance_field.hpp"
#include "geolab/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace geolab {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct RaySample {
    double s, x, theta, vx, vth;
};

using Polyline = std::vector<RaySample>;

struct FanContext {
    const ProfileMetric* metric = nullptr;
    const WarpedMetric* warped = nullptr;
    BilinearTable* table = nullptr;
    Point base;
    double s_max = 0.0;
    double cell = 0.0;
    double ray_step = 0.0;
    double domain_limit = 0.0;
    std::size_t rays = 0;
};

Polyline integrate_ray(FanContext& ctx, double alpha) {
    ++ctx.rays;
    GeodesicOptions go;
    go.step = ctx.ray_step;
    go.domain_limit = ctx.domain_limit;
    go.sample_stride = 1;
    const Geodesic g =
        shoot_geodesic(*ctx.metric, ctx.base, alpha, ctx.s_max, go);
    Polyline poly;
    poly.reserve(g.samples.size());
    for (const auto& st : g.samples) {
        poly.push_back({st.s, st.x, st.theta, st.vx, st.vtheta});
    }
    return poly;
}

void deposit(FanContext& ctx, const Polyline& poly) {
    BilinearTable& t = *ctx.table;
    const double halfcell = 0.75 * ctx.cell;
    const auto nth = static_cast<long>(t.ny());

    for (const auto& st : poly) {
        const double fx = (st.x - t.x0()) / t.dx();
        if (fx < 0.0 || fx > static_cast<double>(t.nx() - 1)) continue;
        const double b = ctx.warped->fiber(st.x);

        const long i0 = static_cast<long>(std::floor(fx));
        const double fth = (st.theta - t.y0()) / t.dy();
        const long j0 = static_cast<long>(std::floor(fth));

        for (long di = 0; di <= 1; ++di) {
            const long i = i0 + di;
            if (i < 0 || i >= static_cast<long>(t.nx())) continue;
            const double xn = t.x0() + i * t.dx();
            const double ddx = xn - st.x;
            for (long dj = 0; dj <= 1; ++dj) {
                long j = ((j0 + dj) % nth + nth) % nth;
                const double thn = t.y0() + (j0 + dj) * t.dy();
                const double ddth = std::remainder(thn - st.theta, kTwoPi);
                const double metric_sq = ddx * ddx + b * ddth * ddth;
                if (metric_sq > halfcell * halfcell) continue;
                // First-order correction along the ray tangent.
                double v = st.s + st.vx * ddx + b * st.vth * ddth;
                if (v < 0.0) v = 0.0;
                double& slot = t.at(static_cast<std::size_t>(i),
                                    static_cast<std::size_t>(j));
                if (v < slot) slot = v;
            }
        }
    }
}

double pair_gap(const FanContext& ctx, const Polyline& a, const Polyline& b) {
    const std::size_t n = std::min(a.size(), b.size());
    double gap = 0.0;
    for (std::size_t k = 0; k < n; k += 4) {
        const double dx = a[k].x - b[k].x;
        const double dth = std::remainder(a[k].theta - b[k].theta, kTwoPi);
        const double f = ctx.warped->fiber(a[k].x);
        gap = std::max(gap, dx * dx + f * dth * dth);
    }
    return std::sqrt(gap);
}

void refine(FanContext& ctx, double a0, const Polyline& p0, double a1,
            const Polyline& p1, int depth, int max_depth) {
    if (depth >= max_depth) return;
    if (pair_gap(ctx, p0, p1) <= 0.6 * ctx.cell) return;
    const double mid = 0.5 * (a0 + a1);
    Polyline pm = integrate_ray(ctx, mid);
    deposit(ctx, pm);
    refine(ctx, a0, p0, mid, pm, depth + 1, max_depth);
    refine(ctx, mid, pm, a1, p1, depth + 1, max_depth);
}

} // namespace

DistanceField::DistanceField(const WarpedMetric& m, Point base,
                             double x_halfwidth,
                             const DistanceFieldOptions& opts)
    : base_(base) {
    if (!(x_halfwidth > 0.0)) {
        throw ArgumentError("DistanceField: half-width must be positive");
    }
    const auto nx =
        static_cast<std::size_t>(std::ceil(2.0 * x_halfwidth / opts.cell)) + 1;
    const auto nth = static_cast<std::size_t>(
        std::max(8.0, std::round(kTwoPi / opts.cell)));
    table_ = BilinearTable(base.x - x_halfwidth, 2.0 * x_halfwidth / (nx - 1),
                           nx, 0.0, kTwoPi / nth, nth, true);
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < nth; ++j) {
            table_.at(i, j) = std::numeric_limits<double>::infinity();
        }
    }

    const auto pm = ProfileMetric::from_warped(m);
    FanContext ctx;
    ctx.metric = &pm;
    ctx.warped = &m;
    ctx.table = &table_;
    ctx.base = base;
    ctx.s_max = x_halfwidth + opts.budget_pad;
    ctx.cell = opts.cell;
    ctx.ray_step = opts.ray_step;
    ctx.domain_limit = opts.domain_limit;

    // Initial uniform fan, then adaptive angular refinement wherever
    // neighbouring rays spread further apart than the deposit radius.
    const int n0 = std::max(16, opts.initial_rays);
    Polyline prev = integrate_ray(ctx, 0.0);
    Polyline first = prev;
    deposit(ctx, prev);
    for (int k = 1; k <= n0; ++k) {
        const double a = kTwoPi * k / n0;
        Polyline cur = (k == n0) ? first : integrate_ray(ctx, a);
        if (k < n0) deposit(ctx, cur);
        refine(ctx, kTwoPi * (k - 1) / n0, prev, a, cur, 0, opts.max_depth);
        prev = std::move(cur);
    }
    rays_ = ctx.rays;

    // Direct-BVP repair of any node the fan failed to reach.
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < nth; ++j) {
            if (std::isfinite(table_.at(i, j))) continue;
            const Point z{table_.x0() + i * table_.dx(),
                          table_.y0() + j * table_.dy()};
            table_.at(i, j) = distance(m, base, z, opts.repair).value;
            ++repaired_;
        }
    }
}

} // namespace geolab
