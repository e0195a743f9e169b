#pragma once

#include <functional>

#include "generating_function.hpp"
#include "potential.hpp"
#include "split_step.hpp"
#include "wavefunction.hpp"

namespace qhj {

/* Affine solution of the operator equations of motion for a quadratic
 * Hamiltonian: the time-t position and momentum operators expressed in the
 * fixed t = 0 operators,
 *     q_H(t) = qq q + qp p + q0,   p_H(t) = pq q + pp p + p0.
 * The coefficient matrix is symplectic, so qq pp - qp pq = 1. */
struct HeisenbergSolution {
    double t = 0.0;
    double qq = 1.0, qp = 0.0, q0 = 0.0;
    double pq = 0.0, pp = 1.0, p0 = 0.0;

    double commutator_defect() const { return qq * pp - qp * pq - 1.0; }

    /* Push initial means through the affine map. */
    void map_means(double mean_q, double mean_p, double& out_q, double& out_p) const;
};

/* Heisenberg operators from a generating function of the evolution: the new
 * variables of the induced map label the initial conditions, so inverting the
 * extracted map and relabeling gives the operator flow. */
HeisenbergSolution heisenberg_from_generating(const QuadraticGeneratingFunction& gf,
                                              double t);

/* Residuals of d/dt q_H = p_H and d/dt p_H = -V'(q_H) on the affine
 * coefficients, with time derivatives from five-point stencils of the family.
 * Quadratic potentials only; the family must be regular on [t-2h, t+2h]. */
struct HeisenbergResidual {
    double max_eom_residual = 0.0;
    double commutator_defect = 0.0;
};

HeisenbergResidual verify_heisenberg_equations(
    const Potential& pot, const std::function<HeisenbergSolution(double)>& family,
    double t, double h = 1e-3);

/* Expectation values predicted by the affine map against direct evolution of
 * the state by the independent split-operator integrator. */
struct EhrenfestReport {
    double predicted_q = 0.0, predicted_p = 0.0;
    double oracle_q = 0.0, oracle_p = 0.0;

    double max_error() const;
};

EhrenfestReport ehrenfest_crosscheck(const Potential& pot,
                                     const HeisenbergSolution& sol,
                                     const WaveFunction& psi0,
                                     const SplitStepOptions& opt = {});

}  // namespace qhj
