#pragma once
#include "geolab/cutoff.hpp"
#include "geolab/distance_field.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

namespace geolab {

using ScalarField = std::function<double(Point)>;

/// How the smoothing integral is represented. The tangent form averages
/// over the exponential image of the tangent ball (always defined, kernel
/// normalized on the plane); the manifold form integrates the kernel of
/// the distance over the surface itself and is the representation whose
/// derivative bounds degenerate once the kernel radius reaches the
/// injectivity radius.
enum class ConvolutionForm { tangent, manifold };

struct GreenWuOptions {
    int radial_nodes = 24;
    int angular_nodes = 64;
    double domain_limit = 20.0;
    ConvolutionForm form = ConvolutionForm::tangent;
    DistanceOptions short_bvp; // manifold form only
};

/// Riemannian convolution f_eps(p) with the normalized plateau kernel.
/// Throws DomainError when the kernel support leaves the working domain.
double green_wu_convolve(const ScalarField& fn, Point p, double eps,
                         const WarpedMetric& m, const GreenWuOptions& opts = {});

struct SmoothedDistanceOptions {
    int nodes_across = 64;    // quadrature columns across the kernel ball
    double box_factor = 1.05; // bounding-box halfwidth in units of k1
    double denom_floor = 0.03; // fraction of the ball area
    double sandwich_slack = 2e-3;
    double domain_limit = 20.0;
    int max_winding = 2;
    DistanceOptions short_bvp;
};

struct SmoothedDistanceValue {
    double smoothed = 0.0;  // integral average of the base distance
    double truncated = 0.0; // smoothed * (1 - eta(smoothed / a))
};

/// The integral-averaged distance from the base point and its truncation:
///     smoothed(y) = int rho(p0,z) eta(rho(y,z)/k1) dz / int eta(...) dz,
///     k1 = pi / (4 sqrt(k0)).
/// Quadrature is a midpoint rule on a fixed global lattice (banded in
/// theta so node density follows the fiber size); membership and weights
/// use the shooting distance, the base distance comes from the cached
/// field. Evaluations are memoized; the cache takes concurrent reads with
/// exclusive writes.
class SmoothedDistance {
public:
    SmoothedDistance(const WarpedMetric& m,
                     std::shared_ptr<const DistanceField> base_field,
                     double curvature_bound, double truncation_a,
                     SmoothedDistanceOptions opts = {});

    SmoothedDistanceValue evaluate(Point y) const;

    double radius() const { return k1_; }        // k1
    double truncation() const { return a_; }     // a
    double curvature_bound() const { return k0_; }
    Point base() const { return field_->base(); }
    const DistanceField& base_field() const { return *field_; }
    const WarpedMetric& metric() const { return metric_; }
    const SmoothedDistanceOptions& options() const { return opts_; }

private:
    SmoothedDistanceValue evaluate_uncached(Point y) const;

    WarpedMetric metric_;
    std::shared_ptr<const DistanceField> field_;
    double k0_, k1_, a_;
    SmoothedDistanceOptions opts_;
    CutoffProfile cut_;
    double lattice_dx_;

    mutable std::mutex cache_mutex_;
    mutable std::unordered_map<std::uint64_t, SmoothedDistanceValue> cache_;
};

struct DerivativeSample {
    Point y;
    double rho = 0.0;
    double grad_norm = 0.0;
    double hess_norm = 0.0;
};

struct DerivativeBoundReport {
    std::vector<DerivativeSample> samples;
    std::vector<Point> skipped;
    double grad_max = 0.0, hess_max = 0.0;
    double grad_slope = 0.0, hess_slope = 0.0; // least squares vs rho
};

/// Frame-covariant gradient/Hessian norms of an arbitrary scalar field by
/// central differences of metric-normalized steps, reported against the
/// provided per-sample distance values.
DerivativeBoundReport scalar_derivative_report(
    const ScalarField& fn, const ScalarField& rho_of, const WarpedMetric& h,
    std::span<const Point> samples, double step);

/// The same report for the truncated smoothed distance; the stand-in for
/// the uniform C^2 constants. step defaults to 1e-2 * k1. Samples closer
/// than the quadrature margin to the domain edge are skipped.
DerivativeBoundReport derivative_bound_report(const SmoothedDistance& sd,
                                              std::span<const Point> samples,
                                              const WarpedMetric& h,
                                              double step = -1.0);

} // namespace geolab
