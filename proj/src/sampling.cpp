#include "geolab/sampling.hpp"
#include "geolab/error.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace geolab {

std::vector<Point> seeded_band_samples(std::uint64_t seed, int count,
                                       double x_min, double x_max,
                                       bool both_signs) {
    if (count < 0 || !(x_max > x_min)) {
        throw ArgumentError("seeded_band_samples: bad band or count");
    }
    // Plastic-constant directions give a well-spread 2D lattice.
    const double g = 1.3247179572447460;
    const double a1 = 1.0 / g;
    const double a2 = 1.0 / (g * g);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double o1 = u01(rng), o2 = u01(rng);

    std::vector<Point> pts;
    pts.reserve(count);
    for (int i = 0; i < count; ++i) {
        double u = std::fmod(o1 + a1 * (i + 1), 1.0);
        double v = std::fmod(o2 + a2 * (i + 1), 1.0);
        double x = x_min + (x_max - x_min) * u;
        if (both_signs && (rng() & 1u)) x = -x;
        pts.push_back({x, 2.0 * std::numbers::pi * v});
    }
    return pts;
}

} // namespace geolab
