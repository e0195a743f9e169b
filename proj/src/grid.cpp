#include "grid.hpp"

#include <cmath>

#include "errors.hpp"

namespace qhj {

Grid1D::Grid1D(double x_min, double x_max, std::size_t n)
    : x_min_(x_min), x_max_(x_max), n_(n) {
    if (!(x_max > x_min))
        throw InvalidArgumentError("grid: x_max must exceed x_min");
    if (n < 2)
        throw InvalidArgumentError("grid: need at least two samples");
    if (!std::isfinite(x_min) || !std::isfinite(x_max))
        throw InvalidArgumentError("grid: bounds must be finite");
    dx_ = (x_max_ - x_min_) / static_cast<double>(n_ - 1);
}

std::vector<double> Grid1D::points() const {
    std::vector<double> p(n_);
    for (std::size_t i = 0; i < n_; ++i) p[i] = x(i);
    return p;
}

std::vector<double> Grid1D::trapezoid_weights() const {
    std::vector<double> w(n_, dx_);
    w.front() = 0.5 * dx_;
    w.back() = 0.5 * dx_;
    return w;
}

std::vector<double> Grid1D::uniform_weights() const {
    return std::vector<double>(n_, dx_);
}

std::size_t Grid1D::nearest_index(double xq) const {
    double u = (xq - x_min_) / dx_;
    if (u <= 0.0) return 0;
    double last = static_cast<double>(n_ - 1);
    if (u >= last) return n_ - 1;
    return static_cast<std::size_t>(std::lround(u));
}

}  // namespace qhj
