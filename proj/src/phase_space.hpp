#pragma once

#include <cstddef>
#include <vector>

#include "generating_function.hpp"
#include "grid.hpp"
#include "wavefunction.hpp"

namespace qhj {

/* Real field over a position-momentum grid pair, row-major with the momentum
 * index fastest. Used for Wigner and Husimi distributions and their images
 * under canonical transformations. */
struct PhaseSpaceField {
    Grid1D q_grid, p_grid;
    double hbar = 1.0;
    std::vector<double> values;

    std::size_t index(std::size_t i, std::size_t j) const {
        return i * p_grid.size() + j;
    }
    double at(std::size_t i, std::size_t j) const { return values[index(i, j)]; }
    double& at(std::size_t i, std::size_t j) { return values[index(i, j)]; }

    double integral() const;
    double max_abs() const;
    /* Trapezoid integral over momentum at fixed position, and vice versa. */
    std::vector<double> position_marginal() const;
    std::vector<double> momentum_marginal() const;
};

/* Wigner distribution of a state. The half-offset integral runs over
 * grid-aligned offsets so no interpolation of the state is needed; the
 * momentum grid must stay inside the offset-sampling band |p| < pi hbar / (2 dq)
 * or the phases alias and an error is raised. */
PhaseSpaceField wigner_transform(const WaveFunction& psi, const Grid1D& p_grid);

/* Gaussian smoothing of a Wigner field with the minimal-uncertainty window of
 * squeeze alpha: variances hbar/(2 alpha) in position and hbar alpha / 2 in
 * momentum. alpha must be positive; the window degenerates at alpha -> 0. */
PhaseSpaceField husimi_from_wigner(const PhaseSpaceField& w, double alpha);

/* Pull-back of a field under an affine phase-space map: out(z) = in(map z),
 * with separable four-point polynomial interpolation and zero extension
 * outside the window. The integral must be preserved to leak_tolerance
 * (relative), otherwise mass has left the window. */
PhaseSpaceField transport_field(const PhaseSpaceField& f, const LinearCanonicalMap& map,
                                double leak_tolerance = 1e-3);

struct GaugeKernelOptions {
    double y_half_width = 8.0;   // offset-integral truncation
    std::size_t n_y = 0;         // offset samples; 0 picks by phase resolution
    double taper_fraction = 0.25;  // cosine-squared roll-off at the outer edge
};

/* Exact phase-space action of multiplying the state by exp(i g(q)/hbar): each
 * position row is transformed by the momentum-convolution kernel built from
 * the finite-offset difference g(q-y) - g(q+y). For quadratic g this is the
 * momentum shear p -> p + g'(q); beyond quadratic the kernel acquires a
 * genuine width. */
PhaseSpaceField gauge_quantum_action(const PhaseSpaceField& f, const GaugeFunction& g,
                                     const GaugeKernelOptions& opt = {});

/* Classical counterpart: the pointwise shear out(q, p) = in(q, p - g'(q)),
 * by four-point interpolation along each row. */
PhaseSpaceField gauge_classical_action(const PhaseSpaceField& f, const GaugeFunction& g);

/* Row kernel of the quantum gauge action at fixed q, sampled over momentum
 * transfer: a smoothed delta centered at g'(q) for quadratic g. */
std::vector<double> gauge_kernel_profile(const GaugeFunction& g, double q,
                                         const Grid1D& dp_grid,
                                         const GaugeKernelOptions& opt = {});

/* Comparison helpers; both fields must share grids and hbar. */
double field_max_difference(const PhaseSpaceField& a, const PhaseSpaceField& b);
double field_squared_difference(const PhaseSpaceField& a, const PhaseSpaceField& b);

}  // namespace qhj
