#pragma once

#include <cstddef>

#include "potential.hpp"
#include "trajectory.hpp"

namespace qhj {

struct ShootingOptions {
    /* Two-point data is only well posed away from focal points; both guards
     * raise CausticError. */
    double t_min = 1e-3;
    double jacobian_min = 1e-10;
    /* Newton tolerance on the endpoint miss |q(t) - q1|, relative to the
     * coordinate scale. Kept above the RK4 summation rounding floor
     * (n_steps * eps * |q|), which the iteration cannot beat. */
    double tol = 1e-12;
    int max_iter = 60;
    std::size_t n_steps = 0;  // per-trajectory RK4 steps; 0 picks from t
    double fd_step = 1e-5;    // relative step for finite-difference derivatives
};

struct ShootingResult {
    double p0 = 0.0;  // initial momentum that lands q(0)=Q2 on q(t)=q1
    ClassicalTrajectory trajectory;
    int iterations = 0;
};

/* Hamilton principal function S0(q1, Q2, t) and its first derivatives at one
 * point, from the shooting solution and finite differences of neighboring
 * solutions. */
struct PrincipalFunctionSample {
    double q1 = 0.0, Q2 = 0.0, t = 0.0;
    double S0 = 0.0;
    double dS0_dq1 = 0.0;
    double dS0_dQ2 = 0.0;
    double d2S0_dq1dQ2 = 0.0;
    double arrival_p = 0.0;    // p(t) of the connecting trajectory
    double departure_p = 0.0;  // p(0) of the connecting trajectory
};

/* Damped Newton on the initial momentum, Jacobian from the variational
 * equations, with a time-continuation fallback. Throws CausticError inside the
 * guard bands and NoConvergenceError when the iteration stalls. */
ShootingResult solve_two_point(const Potential& pot, double Q2, double q1, double t,
                               const ShootingOptions& opt = {});

/* Same solver but starting from a caller-supplied momentum guess and without
 * the continuation fallback; used for warm starts along grids. */
ShootingResult solve_two_point_guess(const Potential& pot, double Q2, double q1,
                                     double t, double p0_guess,
                                     const ShootingOptions& opt = {});

PrincipalFunctionSample principal_function_sample(const Potential& pot, double q1,
                                                  double Q2, double t,
                                                  const ShootingOptions& opt = {});

/* |dS0/dt + (dS0/dq1)^2/2 + V(q1,t)| with the time derivative taken by central
 * differences of neighboring shooting solutions. */
double hj_residual(const Potential& pot, double q1, double Q2, double t,
                   const ShootingOptions& opt = {});

}  // namespace qhj
