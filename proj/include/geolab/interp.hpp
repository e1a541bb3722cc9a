#pragma once
#include <cstddef>
#include <vector>

namespace geolab {

/// Monotone cubic (Fritsch-Carlson) interpolant through strictly
/// increasing abscissae. Evaluation clamps to the table range.
class MonotoneCubic {
public:
    MonotoneCubic() = default;
    MonotoneCubic(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;
    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }

private:
    std::vector<double> x_, y_, slope_;
    std::size_t find_interval(double x) const;
};

/// Uniform-grid bilinear table over [x0, x0+nx*dx] x [y0, y0+ny*dy],
/// optionally periodic in the second coordinate.
class BilinearTable {
public:
    BilinearTable() = default;
    BilinearTable(double x0, double dx, std::size_t nx, double y0, double dy,
                  std::size_t ny, bool periodic_y);

    double& at(std::size_t i, std::size_t j) { return data_[i * ny_ + j]; }
    double at(std::size_t i, std::size_t j) const { return data_[i * ny_ + j]; }

    double operator()(double x, double y) const;

    std::size_t nx() const { return nx_; }
    std::size_t ny() const { return ny_; }
    double x0() const { return x0_; }
    double y0() const { return y0_; }
    double dx() const { return dx_; }
    double dy() const { return dy_; }

private:
    double x0_ = 0, dx_ = 1, y0_ = 0, dy_ = 1;
    std::size_t nx_ = 0, ny_ = 0;
    bool periodic_y_ = false;
    std::vector<double> data_;
};

} // namespace geolab
