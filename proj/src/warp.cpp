#include "geolab/warp.hpp"
#include "geolab/cutoff.hpp"
#include "geolab/error.hpp"

#include <cmath>

namespace geolab {
namespace warps {

WarpFunction flat() {
    return {[](double) { return 1.0; },
            [](double) { return 0.0; },
            [](double) { return 0.0; },
            "flat"};
}

WarpFunction constant(double c) {
    if (c <= 0.0) throw DomainError("constant warp must be positive");
    return {[c](double) { return c; },
            [](double) { return 0.0; },
            [](double) { return 0.0; },
            "constant:" + std::to_string(c)};
}

WarpFunction hyperbolic() {
    return {[](double x) { double c = std::cosh(x); return c * c; },
            [](double x) { return std::sinh(2.0 * x); },
            [](double x) { return 2.0 * std::cosh(2.0 * x); },
            "hyperbolic"};
}

WarpFunction example_cap() {
    // f = 1/(x^2 + eta(x)); exactly |x|^-2 outside the unit interval.
    auto den = [](double x) {
        CutoffProfile cut;
        return x * x + cut.eta(x);
    };
    auto den_d1 = [](double x) {
        CutoffProfile cut;
        return 2.0 * x + cut.eta_d1(x);
    };
    auto den_d2 = [](double x) {
        CutoffProfile cut;
        return 2.0 + cut.eta_d2(x);
    };
    return {[den](double x) { return 1.0 / den(x); },
            [den, den_d1](double x) {
                const double d = den(x);
                return -den_d1(x) / (d * d);
            },
            [den, den_d1, den_d2](double x) {
                const double d = den(x);
                const double d1 = den_d1(x);
                return -den_d2(x) / (d * d) + 2.0 * d1 * d1 / (d * d * d);
            },
            "example"};
}

WarpFunction from_function(std::function<double(double)> f,
                           const std::string& name, double step) {
    auto d1 = [f, step](double x) {
        // 4th-order central difference.
        return (8.0 * (f(x + step) - f(x - step)) -
                (f(x + 2 * step) - f(x - 2 * step))) /
               (12.0 * step);
    };
    auto d2 = [f, step](double x) {
        return (16.0 * (f(x + step) + f(x - step)) -
                (f(x + 2 * step) + f(x - 2 * step)) - 30.0 * f(x)) /
               (12.0 * step * step);
    };
    return {std::move(f), d1, d2, name};
}

WarpFunction by_name(const std::string& name) {
    if (name == "flat") return flat();
    if (name == "hyperbolic") return hyperbolic();
    if (name == "example") return example_cap();
    const std::string prefix = "constant:";
    if (name.rfind(prefix, 0) == 0) {
        return constant(std::stod(name.substr(prefix.size())));
    }
    throw ArgumentError("unknown warp profile: " + name);
}

} // namespace warps
} // namespace geolab
