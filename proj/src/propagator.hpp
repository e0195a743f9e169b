#pragma once

#include <complex>
#include <vector>

#include "generating_function.hpp"
#include "hj_series.hpp"
#include "potential.hpp"
#include "wavefunction.hpp"

namespace qhj {

/* Dense sampled integral kernel K(x_i, y_j) together with the grid pair it
 * lives on. apply() performs the quadrature sum over the source grid, mapping
 * a state sampled on the source grid to one on the target grid. */
class PropagatorMatrix {
public:
    PropagatorMatrix(Grid1D target, Grid1D source, double hbar,
                     std::vector<std::complex<double>> entries);

    const Grid1D& target_grid() const { return target_; }
    const Grid1D& source_grid() const { return source_; }
    double hbar() const { return hbar_; }

    std::complex<double> at(std::size_t i, std::size_t j) const {
        return entries_[i * source_.size() + j];
    }
    const std::vector<std::complex<double>>& entries() const { return entries_; }

    /* Weighted matrix-vector product with trapezoid weights on the source
     * grid. */
    WaveFunction apply(const WaveFunction& psi) const;

    /* Apply the conjugate transpose, mapping a target-grid state back to the
     * source grid. For a unitary kernel this reconstructs the transformed
     * representation of a state. */
    WaveFunction apply_adjoint(const WaveFunction& psi) const;

private:
    Grid1D target_;
    Grid1D source_;
    double hbar_;
    std::vector<std::complex<double>> entries_;
};

/* Sample a quadratic-phase kernel on a grid pair. The kernel phase must stay
 * resolvable: its advance between neighbouring source (and target) samples,
 * estimated from the coefficient bound over the window corners, has to remain
 * below pi/2, otherwise the quadrature sum aliases and an error is raised. */
PropagatorMatrix build_propagator(const QuadraticGeneratingFunction& gf,
                                  const Grid1D& target, const Grid1D& source);

/* Same, from a numerically transported phase field including the first
 * correction order; the sampling check uses finite differences of the total
 * phase. */
PropagatorMatrix build_propagator(const SeriesField& field);

/* Evolve a state under a quadratic potential for an arbitrary time by
 * composing closed-form kernels over caustic-free substeps on the state's own
 * grid. min_substeps forces a finer composition. */
WaveFunction evolve_quadratic(const Potential& pot, const WaveFunction& psi,
                              double t, int min_substeps = 0);

/* Continuum-normalized momentum representation on an explicit momentum grid,
 * by direct quadrature of exp(-i p q / hbar) psi(q) / sqrt(2 pi hbar). */
WaveFunction momentum_representation(const WaveFunction& psi, const Grid1D& p_grid);

/* Agreement metrics between two states on the same grid. */
struct OracleComparison {
    double l2_error = 0.0;
    double l2_error_phase_aligned = 0.0;
    double fidelity = 0.0;
    double norm_left = 0.0;
    double norm_right = 0.0;
};

OracleComparison compare_states(const WaveFunction& left, const WaveFunction& right);

}  // namespace qhj
