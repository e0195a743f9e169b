#pragma once

#include <cstddef>
#include <vector>

#include "potential.hpp"

namespace qhj {

/* Classical trajectory of H = p^2/2 + V(q,t) together with the accumulated
 * Lagrangian action S = int (p^2/2 - V) dt and, optionally, the variational
 * derivatives (dq/dp0, dp/dp0) along the path. */
struct ClassicalTrajectory {
    std::vector<double> times;
    std::vector<double> q;
    std::vector<double> p;
    std::vector<double> action;
    /* Sensitivity to the initial momentum; dq_dp0[0] = 0, dp_dp0[0] = 1. */
    std::vector<double> dq_dp0;
    std::vector<double> dp_dp0;

    double q_final() const { return q.back(); }
    double p_final() const { return p.back(); }
    double action_final() const { return action.back(); }

    /* Max |H(t) - H(0)| over stored samples; a fixed-step integrator health
     * check, meaningful for time-independent potentials. */
    double energy_drift(const Potential& pot) const;
};

struct IntegrateOptions {
    std::size_t n_steps = 0;       // 0: choose from duration, ~0.002 per step
    bool with_variational = false; // also integrate (dq/dp0, dp/dp0)
};

/* Classical RK4 from t=0 to t=t_final (t_final > 0). Throws IntegrationError
 * when the state stops being finite. */
ClassicalTrajectory integrate_trajectory(const Potential& pot, double q0, double p0,
                                         double t_final,
                                         const IntegrateOptions& opt = {});

}  // namespace qhj
