#include "geolab/interp.hpp"
#include "geolab/error.hpp"

#include <algorithm>
#include <cmath>

namespace geolab {

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n) {
        throw ArgumentError("MonotoneCubic: need >= 2 matching nodes");
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (!(x_[i] > x_[i - 1])) {
            throw ArgumentError("MonotoneCubic: abscissae not increasing");
        }
    }
    // Fritsch-Carlson slopes: start from secants, then limit.
    std::vector<double> d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        d[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
    }
    slope_.assign(n, 0.0);
    slope_[0] = d[0];
    slope_[n - 1] = d[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        slope_[i] = (d[i - 1] * d[i] > 0.0) ? 0.5 * (d[i - 1] + d[i]) : 0.0;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (d[i] == 0.0) {
            slope_[i] = slope_[i + 1] = 0.0;
            continue;
        }
        const double a = slope_[i] / d[i];
        const double b = slope_[i + 1] / d[i];
        const double s = a * a + b * b;
        if (s > 9.0) {
            const double t = 3.0 / std::sqrt(s);
            slope_[i] = t * a * d[i];
            slope_[i + 1] = t * b * d[i];
        }
    }
}

std::size_t MonotoneCubic::find_interval(double x) const {
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    if (it == x_.begin()) return 0;
    std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
    return std::min(i, x_.size() - 2);
}

double MonotoneCubic::operator()(double x) const {
    x = std::clamp(x, x_.front(), x_.back());
    const std::size_t i = find_interval(x);
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    return h00 * y_[i] + h10 * h * slope_[i] + h01 * y_[i + 1] +
           h11 * h * slope_[i + 1];
}

BilinearTable::BilinearTable(double x0, double dx, std::size_t nx, double y0,
                             double dy, std::size_t ny, bool periodic_y)
    : x0_(x0), dx_(dx), y0_(y0), dy_(dy), nx_(nx), ny_(ny),
      periodic_y_(periodic_y), data_(nx * ny, 0.0) {}

double BilinearTable::operator()(double x, double y) const {
    double u = (x - x0_) / dx_;
    u = std::clamp(u, 0.0, static_cast<double>(nx_ - 1));
    std::size_t i = std::min(static_cast<std::size_t>(u), nx_ - 2);
    const double fu = u - static_cast<double>(i);

    double v = (y - y0_) / dy_;
    std::size_t j0, j1;
    double fv;
    if (periodic_y_) {
        const double period = static_cast<double>(ny_);
        v = std::fmod(v, period);
        if (v < 0) v += period;
        j0 = static_cast<std::size_t>(v) % ny_;
        j1 = (j0 + 1) % ny_;
        fv = v - std::floor(v);
    } else {
        v = std::clamp(v, 0.0, static_cast<double>(ny_ - 1));
        j0 = std::min(static_cast<std::size_t>(v), ny_ - 2);
        j1 = j0 + 1;
        fv = v - static_cast<double>(j0);
    }
    const double a = at(i, j0) * (1 - fv) + at(i, j1) * fv;
    const double b = at(i + 1, j0) * (1 - fv) + at(i + 1, j1) * fv;
    return a * (1 - fu) + b * fu;
}

} // namespace geolab
