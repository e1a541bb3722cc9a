#include "geolab/cutoff.hpp"
#include "geolab/error.hpp"

#include <algorithm>
#include <cmath>

namespace geolab {
namespace {

// Smoothstep S(t) = psi(t)/(psi(t)+psi(1-t)) with psi(t) = exp(-1/t),
// S == 0 for t <= 0 and S == 1 for t >= 1. Closed-form S, S', S''.
struct Smoothstep {
    double s, d1, d2;
};

Smoothstep smoothstep(double t) {
    if (t <= 1e-9) return {0.0, 0.0, 0.0};
    if (t >= 1.0 - 1e-9) return {1.0, 0.0, 0.0};

    const double u = 1.0 - t;
    const double a = std::exp(-1.0 / t);
    const double b = std::exp(-1.0 / u);
    const double t2 = t * t, t4 = t2 * t2;
    const double u2 = u * u, u4 = u2 * u2;

    const double sum = a + b;
    const double sum2 = sum * sum;
    const double ab = a * b;

    const double value = a / sum;
    const double n = ab * (1.0 / t2 + 1.0 / u2);
    const double d1 = n / sum2;

    // N' = a''b - ab'' with a'' = a(1-2t)/t^4, b'' = b(2t-1)/u^4.
    const double nprime = ab * (1.0 - 2.0 * t) * (1.0 / t4 + 1.0 / u4);
    // D = sum^2, D' = 2 sum (a' + b') with a' = a/t^2, b' = -b/u^2.
    const double dprime_over_d = 2.0 * (a / t2 - b / u2) / sum;
    const double d2 = nprime / sum2 - d1 * dprime_over_d;

    return {value, d1, d2};
}

// Transition parameter: eta(s) = S(2 - 2|s|) on 1/2 < |s| < 1.
constexpr double kPlateau = 0.5;
constexpr double kSupport = 1.0;

} // namespace

double CutoffProfile::eta(double s) const {
    const double r = std::abs(s);
    if (r <= kPlateau) return 1.0;
    if (r >= kSupport) return 0.0;
    return smoothstep(2.0 - 2.0 * r).s;
}

double CutoffProfile::eta_d1(double s) const {
    const double r = std::abs(s);
    if (r <= kPlateau || r >= kSupport) return 0.0;
    const double sign = (s > 0.0) ? 1.0 : -1.0;
    return smoothstep(2.0 - 2.0 * r).d1 * (-2.0) * sign;
}

double CutoffProfile::eta_d2(double s) const {
    const double r = std::abs(s);
    if (r <= kPlateau || r >= kSupport) return 0.0;
    return smoothstep(2.0 - 2.0 * r).d2 * 4.0;
}

double CutoffProfile::phi_ratio_sup(int samples) const {
    double sup = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double s = kPlateau + (kSupport - kPlateau) * (i + 0.5) / samples;
        const double p = phi(s);
        if (p <= 0.0) continue;
        const double d = phi_d1(s);
        sup = std::max(sup, d * d / p);
    }
    return sup;
}

double CutoffProfile::eta_d1_sq_sup(int samples) const {
    double sup = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double s = kPlateau + (kSupport - kPlateau) * (i + 0.5) / samples;
        const double d = eta_d1(s);
        sup = std::max(sup, d * d);
    }
    return sup;
}

double cutoff_eval(const CutoffProfile& profile, double s, int order) {
    switch (order) {
    case 0: return profile.eta(s);
    case 1: return profile.eta_d1(s);
    case 2: return profile.eta_d2(s);
    default: throw ArgumentError("cutoff_eval: order must be 0, 1 or 2");
    }
}

} // namespace geolab
