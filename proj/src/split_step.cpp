#include "split_step.hpp"

#include <cmath>
#include <vector>

#include "errors.hpp"
#include "fft.hpp"

namespace qhj {

namespace {

constexpr double kPi = 3.14159265358979323846;

/* One full evolution at a fixed step count. */
WaveFunction evolve_fixed(const Potential& pot, const WaveFunction& psi0,
                          double t, std::size_t n_steps) {
    const Grid1D& grid = psi0.grid();
    const std::size_t n = grid.size();
    const double hbar = psi0.hbar();
    const double dt = t / static_cast<double>(n_steps);
    const double period = grid.spacing() * static_cast<double>(n);

    // Kinetic phase per full step, on the FFT frequency ladder.
    std::vector<std::complex<double>> kin(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double k = 2.0 * kPi * static_cast<double>(Fft::freq_index(j, n)) / period;
        kin[j] = std::exp(std::complex<double>(0.0, -0.5 * hbar * k * k * dt));
    }

    Fft fft(n);
    std::vector<std::complex<double>> psi = psi0.values();
    std::vector<std::complex<double>> work(n);

    for (std::size_t s = 0; s < n_steps; ++s) {
        const double t_mid = (static_cast<double>(s) + 0.5) * dt;
        for (std::size_t i = 0; i < n; ++i) {
            const double phase = -0.5 * pot.value(grid.x(i), t_mid) * dt / hbar;
            psi[i] *= std::complex<double>(std::cos(phase), std::sin(phase));
        }
        fft.forward(psi.data(), work.data());
        for (std::size_t j = 0; j < n; ++j) work[j] *= kin[j];
        fft.inverse(work.data(), psi.data());
        for (std::size_t i = 0; i < n; ++i) {
            const double phase = -0.5 * pot.value(grid.x(i), t_mid) * dt / hbar;
            psi[i] *= std::complex<double>(std::cos(phase), std::sin(phase));
        }
    }
    return WaveFunction(grid, std::move(psi), hbar);
}

}  // namespace

WaveFunction split_step_evolve(const Potential& pot, const WaveFunction& psi0,
                               double t, const SplitStepOptions& opt) {
    if (!std::isfinite(t) || t < 0.0)
        throw InvalidArgumentError("split_step_evolve: time must be finite and nonnegative");
    if (opt.n_steps == 0)
        throw InvalidArgumentError("split_step_evolve: n_steps must be positive");
    if (psi0.edge_fraction() > opt.edge_limit)
        throw DomainTruncationError(
            "split_step_evolve: initial state touches the window edge; enlarge the grid");
    if (t == 0.0) return psi0;

    WaveFunction coarse = evolve_fixed(pot, psi0, t, opt.n_steps);
    if (!opt.convergence_check) {
        if (coarse.edge_fraction() > opt.edge_limit)
            throw DomainTruncationError(
                "split_step_evolve: evolved state reached the window edge; enlarge the grid");
        return coarse;
    }

    WaveFunction fine = evolve_fixed(pot, psi0, t, 2 * opt.n_steps);
    const double diff = l2_distance(coarse, fine);
    if (!(diff < opt.gate))
        throw ConvergenceGateError(
            "split_step_evolve: step-halving difference " + std::to_string(diff) +
            " exceeds gate; increase n_steps");
    if (fine.edge_fraction() > opt.edge_limit)
        throw DomainTruncationError(
            "split_step_evolve: evolved state reached the window edge; enlarge the grid");
    return fine;
}

}  // namespace qhj
