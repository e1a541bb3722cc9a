#pragma once

namespace geolab {

/// Even C^inf cutoff on the line: eta == 1 on |s| <= 1/2, eta == 0 on
/// |s| >= 1, monotone on the transition band, built from the exp(-1/t)
/// smoothstep so plateau values and all derivatives there are exact.
///
/// phi = eta^2 is the squared cutoff used for localization in maximum
/// principle arguments; sup(phi'^2/phi) = 4 sup(eta'^2) is finite.
class CutoffProfile {
public:
    double eta(double s) const;
    double eta_d1(double s) const;
    double eta_d2(double s) const;

    double phi(double s) const { double e = eta(s); return e * e; }
    double phi_d1(double s) const { return 2.0 * eta(s) * eta_d1(s); }
    double phi_d2(double s) const {
        double d1 = eta_d1(s);
        return 2.0 * d1 * d1 + 2.0 * eta(s) * eta_d2(s);
    }

    /// sup over the real line of phi'^2/phi, by dense sampling of the
    /// transition band (the plateaus contribute zero).
    double phi_ratio_sup(int samples = 20001) const;

    /// sup over the real line of eta'^2, by dense sampling.
    double eta_d1_sq_sup(int samples = 20001) const;
};

/// Evaluate eta (order 0), eta' (order 1) or eta'' (order 2) at s.
double cutoff_eval(const CutoffProfile& profile, double s, int order);

} // namespace geolab
