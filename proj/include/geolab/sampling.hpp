#pragma once
#include "geolab/metric.hpp"

#include <cstdint>
#include <vector>

namespace geolab {

/// Seeded quasi-random points over a band of the cylinder: a Kronecker
/// additive recurrence (plastic-constant directions) with seed-derived
/// offsets, so runs are reproducible and the points are recorded in
/// reports rather than regenerated.
std::vector<Point> seeded_band_samples(std::uint64_t seed, int count,
                                       double x_min, double x_max,
                                       bool both_signs = false);

} // namespace geolab
