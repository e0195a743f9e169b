#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "generating_function.hpp"
#include "grid.hpp"
#include "potential.hpp"
#include "shooting.hpp"

namespace qhj {

struct TransportOptions {
    /* The order-1 amplitude equation is integrated from t_ref with the
     * two-term short-time value (i/2)(ln t_ref - V''(Q2) t_ref^2/6), which
     * pins the integration constant to the free-particle form at t -> 0+. */
    double t_ref = 1e-3;
    std::size_t fan_size = 0;      // characteristics per bundle; 0 picks one
    std::size_t n_time_steps = 0;  // geometric steps from t_ref; 0 picks one
    ShootingOptions shooting{};
};

/* S0 and the first correction S1 along the bundle of characteristics leaving
 * Q2, sampled at the requested arrival positions q1 at time t. */
struct Order1Solution {
    std::vector<double> q1;
    std::vector<double> S0;
    std::vector<complex> S1;
    std::vector<double> departure_p;
    std::vector<double> arrival_p;
};

/* Integrates dS1/dt = (i/2) d2S0/dq2 along characteristics, evaluating the
 * curvature by finite differences across a fan of neighboring trajectories.
 * Throws CausticError when the fan stops being single-valued over position. */
Order1Solution solve_order1_transport(const Potential& pot, double Q2,
                                      std::vector<double> q1_targets, double t,
                                      const TransportOptions& opt = {});

/* Independent route to S1 for cross-checks: (i/2) ln of the stability
 * derivative dq_t/dp0 from the variational equations. Shares no code with the
 * transport integration. */
complex order1_stability_log(const Potential& pot, double Q2, double q1, double t,
                             const ShootingOptions& opt = {});

/* S0 and S1 tabulated over a (q, Q) grid pair at one time. The fields are
 * hbar-independent; hbar enters when assembling S = S0 + hbar S1 + constant,
 * with the constant hbar (i/2) ln(i 2 pi hbar) fixed by the t -> 0+ delta
 * normalization of the kernel. */
struct SeriesField {
    Grid1D q_grid, Q_grid;
    double t = 0.0;
    double hbar = 1.0;
    std::vector<double> S0;   // row-major: [i_q * nQ + j_Q]
    std::vector<complex> S1;
    complex constant;

    std::size_t index(std::size_t i, std::size_t j) const {
        return i * Q_grid.size() + j;
    }
    complex total(std::size_t i, std::size_t j) const {
        return complex(S0[index(i, j)], 0.0) + hbar * S1[index(i, j)] + constant;
    }
    complex kernel(std::size_t i, std::size_t j) const {
        return std::exp(complex(0.0, 1.0) * total(i, j) / hbar);
    }
    /* Retarget the assembled constant to a different hbar; the stored fields
     * themselves do not change. */
    SeriesField with_hbar(double new_hbar) const;
};

SeriesField solve_series_field(const Potential& pot, const Grid1D& q_grid,
                               const Grid1D& Q_grid, double t, double hbar,
                               const TransportOptions& opt = {});

/* |dS/dt + (dS/dq)^2/2 - (i hbar/2) d2S/dq2 + V| for the truncated series
 * S = S0 + hbar S1 + const at one (q1, Q2, t), derivatives by five-point
 * stencils of fresh transport solves. O(hbar^2) for smooth potentials, zero
 * to stencil accuracy for quadratic ones. */
double series_residual(const Potential& pot, double q1, double Q2, double t,
                       double hbar, const TransportOptions& opt = {});

/* Same residual for a time-family of quadratic forms, e.g. the closed-form
 * tables: q-derivatives analytic from the coefficients, time derivative by a
 * five-point stencil of the family. Evaluated at the argument point (x, y). */
double quadratic_family_residual(
    const std::function<QuadraticGeneratingFunction(double)>& family,
    const Potential& pot, double x, double y, double t);

/* F1 for the harmonic evolution whose t = 0 member swaps the roles of
 * position and momentum: S = -(q^2+Q^2) tan(t)/2 + q Q sec(t)
 * + hbar (i/2) ln(2 pi hbar cos t). At t = 0 the kernel is the Fourier kernel
 * and the induced map is p = Q, P = -q. */
QuadraticGeneratingFunction exchange_generating_function(double t, double hbar);

/* Delta-family check of a kernel K(q1, Q2; t): quadrature of K against smooth
 * test functions at a sequence of shrinking times, compared to the test
 * function at the probe point. Errors should fall roughly linearly in t. */
struct InitialConditionReport {
    std::vector<double> times;
    std::vector<double> errors;  // worst over the test functions
    bool monotone = false;
    double final_error = 0.0;
};

InitialConditionReport verify_initial_condition(
    const std::function<complex(double q1, double Q2, double t)>& kernel,
    double hbar, double probe_q, const std::vector<double>& times);

}  // namespace qhj
