#pragma once
#include "geolab/distance.hpp"
#include "geolab/interp.hpp"

#include <cstddef>

namespace geolab {

struct DistanceFieldOptions {
    double cell = 0.02;          // grid spacing (x and metric theta at the axis)
    double ray_step = 1e-2;      // RK4 step along fan rays
    double budget_pad = 4.5;     // extra arclength beyond the x half-width
    int initial_rays = 4096;     // fan resolution before adaptive splitting
    int max_depth = 14;          // adaptive angular subdivision depth
    double domain_limit = 20.0;
    DistanceOptions repair;      // options for the direct-BVP repair pass
};

/// Single-source distance field rho(base, .) tabulated on a regular
/// (x, theta) grid over |x - base.x| <= x_halfwidth, theta periodic.
///
/// Filled by a dense adaptive geodesic fan from the base point: every ray
/// deposits first-order tangent-corrected arclengths onto nearby nodes and
/// nodes keep the minimum. Unreached nodes (none, in practice) are
/// repaired with the direct shooting solver. Queries interpolate
/// bilinearly.
class DistanceField {
public:
    DistanceField(const WarpedMetric& m, Point base, double x_halfwidth,
                  const DistanceFieldOptions& opts = {});

    double operator()(Point z) const { return table_(z.x, z.theta); }

    Point base() const { return base_; }
    std::size_t repaired_nodes() const { return repaired_; }
    std::size_t ray_count() const { return rays_; }

    const BilinearTable& table() const { return table_; }

private:
    Point base_;
    BilinearTable table_;
    std::size_t repaired_ = 0;
    std::size_t rays_ = 0;
};

} // namespace geolab
