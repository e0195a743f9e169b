#pragma once

#include "potential.hpp"
#include "wavefunction.hpp"

namespace qhj {

struct SplitStepOptions {
    std::size_t n_steps = 4000;
    /* Rerun at twice the step count and require L2 agreement below gate;
     * the finer result is returned. */
    bool convergence_check = true;
    double gate = 1e-6;
    /* Largest tolerated |psi| at the window edges relative to the peak, before
     * and after evolution; beyond this the periodic wrap is polluting the
     * state. */
    double edge_limit = 1e-6;
};

/* Independent reference evolution: symmetric split-operator stepping with the
 * kinetic factor applied spectrally on the periodic extension of the grid.
 * Time-dependent potentials are sampled at the step midpoint, keeping second
 * order. */
WaveFunction split_step_evolve(const Potential& pot, const WaveFunction& psi0,
                               double t, const SplitStepOptions& opt = {});

}  // namespace qhj
