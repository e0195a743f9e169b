#pragma once

#include <complex>
#include <vector>

#include "grid.hpp"

namespace qhj {

using complex = std::complex<double>;

/* Complex-valued state sampled on a uniform position grid, together with the
 * value of hbar it was prepared with. All quadrature over states uses the
 * trapezoid rule; states are expected to decay at the window edges. */
class WaveFunction {
public:
    WaveFunction() = default;
    WaveFunction(Grid1D grid, std::vector<complex> values, double hbar);

    const Grid1D& grid() const { return grid_; }
    double hbar() const { return hbar_; }
    const std::vector<complex>& values() const { return values_; }
    std::vector<complex>& values() { return values_; }
    complex operator[](std::size_t i) const { return values_[i]; }
    std::size_t size() const { return values_.size(); }

    double norm() const;
    void normalize();

    /* Largest |psi| over the first/last `margin` samples, as a fraction of the
     * overall maximum. Used to detect states leaking out of the window. */
    double edge_fraction(std::size_t margin = 2) const;

    double expectation_q() const;
    double variance_q() const;

    /* Momentum moments via the discrete Fourier transform, treating the window
     * as one period. Accurate when the state and its momentum content are well
     * inside the window and the momentum Nyquist range. */
    double expectation_p() const;
    double variance_p() const;

private:
    Grid1D grid_;
    std::vector<complex> values_;
    double hbar_ = 1.0;
};

/* Normalized Gaussian packet exp(-(q-center_q)^2/(4 width^2) + i center_p q/hbar).
 * width is the position standard deviation of |psi|^2. Rejects packets whose
 * analytic tail mass outside the window exceeds 1e-8 or whose center sits
 * within 5 widths of a window edge. */
WaveFunction make_gaussian(const Grid1D& grid, double center_q, double center_p,
                           double width, double hbar);

complex inner_product(const WaveFunction& a, const WaveFunction& b);

double l2_distance(const WaveFunction& a, const WaveFunction& b);

/* L2 distance minimized over a global phase: sqrt(|a|^2 + |b|^2 - 2|<a,b>|). */
double l2_distance_phase_aligned(const WaveFunction& a, const WaveFunction& b);

/* |<a,b>|^2 / (|a|^2 |b|^2). */
double fidelity(const WaveFunction& a, const WaveFunction& b);

}  // namespace qhj
