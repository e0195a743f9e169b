#pragma once

#include <cstddef>
#include <vector>

namespace qhj {

/* Uniform 1-d grid. Sample positions are always recomputed from the index so
 * that x(i) is bit-for-bit reproducible and free of accumulated rounding. */
class Grid1D {
public:
    Grid1D() = default;
    Grid1D(double x_min, double x_max, std::size_t n);

    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }
    std::size_t size() const { return n_; }
    double spacing() const { return dx_; }

    double x(std::size_t i) const { return x_min_ + static_cast<double>(i) * dx_; }

    std::vector<double> points() const;

    /* Trapezoid weights: endpoint samples carry half weight. Appropriate for
     * integrands that decay at the window edges. */
    std::vector<double> trapezoid_weights() const;

    /* Uniform weights dx for every sample. Appropriate for oscillatory
     * non-decaying integrands treated with the periodic rectangle rule. */
    std::vector<double> uniform_weights() const;

    bool operator==(const Grid1D& other) const {
        return x_min_ == other.x_min_ && x_max_ == other.x_max_ && n_ == other.n_;
    }
    bool operator!=(const Grid1D& other) const { return !(*this == other); }

    /* Index of the closest sample to x, clamped to the grid. */
    std::size_t nearest_index(double x) const;

private:
    double x_min_ = 0.0;
    double x_max_ = 1.0;
    std::size_t n_ = 2;
    double dx_ = 1.0;
};

}  // namespace qhj
