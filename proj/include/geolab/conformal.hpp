#pragma once
#include "geolab/covariant.hpp"
#include "geolab/geodesic.hpp"
#include "geolab/mollify.hpp"

#include <array>
#include <functional>
#include <vector>

namespace geolab {

/// Conformal exponent psi with its covariant frame jet. Implementations:
/// the smoothed-distance factor 4 sqrt(k0) * rho_bar_a, and synthetic
/// closed-form factors used by the two-path curvature consistency check.
class ConformalFactor {
public:
    virtual ~ConformalFactor() = default;
    virtual FrameJet jet(Point p) const = 0;
    virtual double value(Point p) const { return jet(p).value; }
};

/// psi_a = 4 sqrt(k0) * rho_bar_a; nonnegative, vanishing wherever the
/// smoothed distance is at most a/2. Derivatives by central differences
/// of the smoothed distance.
class SmoothedConformalFactor : public ConformalFactor {
public:
    SmoothedConformalFactor(const SmoothedDistance& sd, double fd_step = -1.0);
    FrameJet jet(Point p) const override;
    double value(Point p) const override;
    double truncation() const { return sd_.truncation(); }

private:
    const SmoothedDistance& sd_;
    double step_;
    double scale_; // 4 sqrt(k0)
};

/// Closed-form factor with exact coordinate partials.
class SyntheticFactor : public ConformalFactor {
public:
    SyntheticFactor(const WarpedMetric& base, std::function<double(Point)> psi,
                    std::function<std::array<double, 2>(Point)> grad,
                    std::function<std::array<double, 3>(Point)> hess);
    FrameJet jet(Point p) const override;
    double value(Point p) const override { return psi_(p); }

private:
    WarpedMetric base_;
    std::function<double(Point)> psi_;
    std::function<std::array<double, 2>(Point)> grad_;
    std::function<std::array<double, 3>(Point)> hess_;
};

/// Christoffels of e^{psi} g from the base symbols and the coordinate
/// gradient of psi.
Christoffels conformal_christoffels(const WarpedMetric& base, Point p,
                                    const std::array<double, 2>& grad_psi);

/// Curvature of the rescaled metric assembled from the base curvature and
/// the factor jet. The rescaled norm carries the e^{psi} factor folded in
/// analytically, so huge exponents never appear:
///   r1212_over_exp  = e^{-psi} * R^a_1212
///   rm_ratio        = |Rm^a|_{h^a} * e^{psi}   (the decay-check ratio)
///   rm_rescaled     = |Rm^a|_{h^a}
struct ConformalCurvature {
    double r1212_over_exp = 0.0;
    double rm_ratio = 0.0;
    double rm_rescaled = 0.0;
};

ConformalCurvature conformal_curvature(const WarpedMetric& base, Point p,
                                       const FrameJet& factor);

/// Direct-route check value: R_1212 of the explicitly rescaled component
/// field e^{psi} g by finite differences, divided by e^{psi(p)}.
double direct_rescaled_r1212_over_exp(const WarpedMetric& base,
                                      const std::function<double(Point)>& psi,
                                      Point p, double fd_step = 2e-2);

struct DecayRow {
    double a = 0.0;
    Point sample;
    double psi = 0.0;
    double rm_ratio = 0.0;     // |Rm^a| e^{psi}
    double rm_rescaled = 0.0;  // |Rm^a|
    double fiber_scale = 0.0;  // rescaled fiber circumference / base
    double loop_ratio = 0.0;   // rescaled loop bound / base loop bound
};

struct DecayReport {
    std::vector<DecayRow> rows;
    double ratio_spread = 0.0; // max over a of (max ratio) / min over a
    bool uniform_within_2x = false;
};

/// Ratios |Rm^a| e^{psi_a} across truncation scales and samples, with the
/// injectivity proxy under the rescaled metric. Throws ArgumentError when
/// some a is below max(1, 3 pi / (4 sqrt(k0))).
DecayReport decay_check(const WarpedMetric& base, const SmoothedDistance& sd,
                        const std::vector<double>& a_values,
                        const std::vector<Point>& samples,
                        bool with_loop_proxy = true);

/// Rescaled diagonal components e^{psi} (g11, g22) as a field.
MetricComponents rescaled_components(const WarpedMetric& base,
                                     const std::function<double(Point)>& psi);

} // namespace geolab
