#pragma once
#include <functional>
#include <string>

namespace geolab {

/// Warp profile f for the cylinder metric dx^2 + f(x) dtheta^2.
/// f must be positive on the working domain; d1/d2 must agree with
/// central differences of eval to O(step^2).
struct WarpFunction {
    std::function<double(double)> eval;
    std::function<double(double)> d1;
    std::function<double(double)> d2;
    std::string name;

    double operator()(double x) const { return eval(x); }
};

namespace warps {

/// f == 1: flat cylinder.
WarpFunction flat();

/// f == c for a constant c > 0.
WarpFunction constant(double c);

/// f = cosh^2 x: hyperbolic cylinder, Gauss curvature -1.
WarpFunction hyperbolic();

/// f(x) = 1/(x^2 + eta(x)) with eta the standard cutoff: equals x^-2 for
/// |x| >= 1, smooth and positive across x = 0. The model manifold with
/// bounded curvature and injectivity radius decaying at infinity.
WarpFunction example_cap();

/// Wrap a bare f with 4th-order central-difference derivatives.
WarpFunction from_function(std::function<double(double)> f,
                           const std::string& name, double step = 1e-4);

/// Look up a built-in profile by name ("flat", "hyperbolic", "example",
/// "constant:<value>"). Throws ArgumentError for unknown names.
WarpFunction by_name(const std::string& name);

} // namespace warps
} // namespace geolab
