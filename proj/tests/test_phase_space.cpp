#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "errors.hpp"
#include "phase_space.hpp"
#include "propagator.hpp"

using namespace qhj;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("Wigner distribution of a Gaussian packet matches the closed form") {
    Grid1D q_grid(-8.0, 8.0, 256);
    Grid1D p_grid(-8.0, 8.0, 256);
    const double q0 = 0.5, p0 = -0.3, sigma = 0.9, hbar = 1.0;
    WaveFunction psi = make_gaussian(q_grid, q0, p0, sigma, hbar);
    PhaseSpaceField w = wigner_transform(psi, p_grid);

    for (std::size_t i = 40; i < 256; i += 31) {
        for (std::size_t j = 40; j < 256; j += 31) {
            const double dq = q_grid.x(i) - q0;
            const double dp = p_grid.x(j) - p0;
            const double exact = std::exp(-dq * dq / (2.0 * sigma * sigma) -
                                          2.0 * sigma * sigma * dp * dp /
                                              (hbar * hbar)) /
                                 (kPi * hbar);
            CHECK(std::abs(w.at(i, j) - exact) < 1e-8);
        }
    }
    CHECK(std::abs(w.integral() - 1.0) < 1e-8);
}

TEST_CASE("Wigner marginals reproduce position and momentum densities") {
    Grid1D q_grid(-8.0, 8.0, 256);
    Grid1D p_grid(-8.0, 8.0, 256);
    WaveFunction psi = make_gaussian(q_grid, 0.5, -0.3, 0.9, 1.0);
    PhaseSpaceField w = wigner_transform(psi, p_grid);

    std::vector<double> pos = w.position_marginal();
    double worst = 0.0;
    for (std::size_t i = 0; i < q_grid.size(); ++i)
        worst = std::max(worst, std::abs(pos[i] - std::norm(psi[i])));
    CHECK(worst < 1e-8);

    WaveFunction phi = momentum_representation(psi, p_grid);
    std::vector<double> mom = w.momentum_marginal();
    worst = 0.0;
    for (std::size_t j = 0; j < p_grid.size(); ++j)
        worst = std::max(worst, std::abs(mom[j] - std::norm(phi[j])));
    CHECK(worst < 1e-8);
}

TEST_CASE("Wigner distribution of an odd state is negative at the origin") {
    Grid1D grid(-8.0, 8.0, 257);
    std::vector<complex> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double q = grid.x(i);
        vals[i] = q * std::exp(-0.5 * q * q);
    }
    WaveFunction psi(grid, vals, 1.0);
    psi.normalize();
    PhaseSpaceField w = wigner_transform(psi, grid);
    // Grid index 128 is exactly q = p = 0; W(0,0) = -1/pi for any odd state.
    CHECK(w.at(128, 128) == doctest::Approx(-1.0 / kPi).epsilon(1e-6));
}

TEST_CASE("Wigner transform refuses momentum windows beyond the offset band") {
    Grid1D coarse(-8.0, 8.0, 64);
    Grid1D p_grid(-8.0, 8.0, 64);
    WaveFunction psi = make_gaussian(coarse, 0.0, 0.0, 1.0, 1.0);
    CHECK_THROWS_AS(wigner_transform(psi, p_grid), AliasingError);
}

TEST_CASE("Husimi smoothing of a matched coherent state is the wide Gaussian") {
    Grid1D q_grid(-8.0, 8.0, 256);
    Grid1D p_grid(-8.0, 8.0, 256);
    WaveFunction psi = make_gaussian(q_grid, 0.0, 0.0, std::sqrt(0.5), 1.0);
    PhaseSpaceField w = wigner_transform(psi, p_grid);
    PhaseSpaceField h = husimi_from_wigner(w, 1.0);

    // Variances add: 1/2 + 1/2 in both directions.
    for (std::size_t i = 60; i < 200; i += 17) {
        for (std::size_t j = 60; j < 200; j += 17) {
            const double q = q_grid.x(i), p = p_grid.x(j);
            const double exact = std::exp(-0.5 * q * q - 0.5 * p * p) / (2.0 * kPi);
            CHECK(std::abs(h.at(i, j) - exact) < 1e-6);
        }
    }
    CHECK(std::abs(h.integral() - 1.0) < 1e-6);
    CHECK(*std::min_element(h.values.begin(), h.values.end()) > -1e-10);
    CHECK_THROWS_AS(husimi_from_wigner(w, 0.0), InvalidArgumentError);
    CHECK_THROWS_AS(husimi_from_wigner(w, -2.0), InvalidArgumentError);
}

TEST_CASE("evolved Wigner equals classically transported Wigner, constant force") {
    Grid1D q_grid(-8.0, 8.0, 256);
    Grid1D p_grid(-8.0, 8.0, 256);
    Potential pot = Potential::constant_force(1.0);
    WaveFunction psi0 = make_gaussian(q_grid, -1.0, 0.3, 0.8, 1.0);
    const double t = 1.0;

    WaveFunction psi_t = evolve_quadratic(pot, psi0, t);
    PhaseSpaceField via_state = wigner_transform(psi_t, p_grid);

    PhaseSpaceField w0 = wigner_transform(psi0, p_grid);
    LinearCanonicalMap back = extract_canonical_map(
        closed_form_generating(pot, GfType::F1, t, 1.0));
    PhaseSpaceField via_flow = transport_field(w0, back);

    CHECK(field_max_difference(via_state, via_flow) < 1e-3);
}

TEST_CASE("evolved Wigner equals classically transported Wigner, harmonic") {
    Grid1D q_grid(-8.0, 8.0, 256);
    Grid1D p_grid(-8.0, 8.0, 256);
    Potential pot = Potential::harmonic(1.0);
    WaveFunction psi0 = make_gaussian(q_grid, 1.0, 0.0, std::sqrt(0.5), 1.0);
    const double t = kPi / 3.0;

    WaveFunction psi_t = evolve_quadratic(pot, psi0, t);
    PhaseSpaceField via_state = wigner_transform(psi_t, p_grid);

    PhaseSpaceField w0 = wigner_transform(psi0, p_grid);
    LinearCanonicalMap back = extract_canonical_map(
        closed_form_generating(pot, GfType::F1, t, 1.0));
    PhaseSpaceField via_flow = transport_field(w0, back);

    CHECK(field_max_difference(via_state, via_flow) < 1e-3);
}

TEST_CASE("transport detects mass pushed off the window") {
    Grid1D q_grid(-6.0, 6.0, 96);
    Grid1D p_grid(-6.0, 6.0, 96);
    WaveFunction psi = make_gaussian(q_grid, 0.0, 0.0, 0.8, 1.0);
    PhaseSpaceField w = wigner_transform(psi, p_grid);
    LinearCanonicalMap shift;  // pull-back from q + 10: support leaves the window
    shift.e = 10.0;
    CHECK_THROWS_AS(transport_field(w, shift), MassLeakageError);
}

TEST_CASE("quadratic gauge: quantum kernel action equals the classical shear") {
    Grid1D q_grid(-5.0, 5.0, 128);
    Grid1D p_grid(-16.0, 16.0, 256);
    WaveFunction psi = make_gaussian(q_grid, 0.0, 0.0, 0.8, 1.0);
    PhaseSpaceField w = wigner_transform(psi, p_grid);

    GaugeFunction g = gauge_generating_function({0.0, 0.0, 1.0}, 1.0);  // g = q^2
    GaugeKernelOptions opt;
    opt.y_half_width = 6.0;
    PhaseSpaceField quantum = gauge_quantum_action(w, g, opt);
    PhaseSpaceField classical = gauge_classical_action(w, g);

    CHECK(field_max_difference(quantum, classical) < 1e-4);
    // The kernel acts only along momentum: position marginals are untouched.
    std::vector<double> before = w.position_marginal();
    std::vector<double> after = quantum.position_marginal();
    double worst = 0.0;
    for (std::size_t i = 0; i < q_grid.size(); ++i)
        worst = std::max(worst, std::abs(before[i] - after[i]));
    CHECK(worst < 1e-6);
}

TEST_CASE("cubic gauge: quantum and classical actions genuinely separate") {
    Grid1D q_grid(-5.0, 5.0, 128);
    Grid1D p_grid(-16.0, 16.0, 256);
    WaveFunction psi = make_gaussian(q_grid, 0.0, 0.0, 0.8, 1.0);
    PhaseSpaceField w = wigner_transform(psi, p_grid);
    GaugeKernelOptions opt;
    opt.y_half_width = 6.0;

    GaugeFunction quad = gauge_generating_function({0.0, 0.0, 1.0}, 1.0);
    const double floor2 = field_squared_difference(
        gauge_quantum_action(w, quad, opt), gauge_classical_action(w, quad));

    GaugeFunction cubic = gauge_generating_function({0.0, 0.0, 0.0, 0.3}, 1.0);
    const double split2 = field_squared_difference(
        gauge_quantum_action(w, cubic, opt), gauge_classical_action(w, cubic));

    CHECK(split2 > 10.0 * floor2);
    CHECK(split2 > 1e-6);  // the separation is structural, not roundoff
}

TEST_CASE("gauge kernel row profile is a normalized peak at the shear momentum") {
    GaugeFunction g = gauge_generating_function({0.0, 0.0, 1.0}, 1.0);  // g' = 2q
    const double q = 1.2;
    Grid1D dp_grid(0.0, 5.0, 501);
    GaugeKernelOptions opt;
    opt.y_half_width = 6.0;
    std::vector<double> profile = gauge_kernel_profile(g, q, dp_grid, opt);

    const std::size_t peak =
        std::max_element(profile.begin(), profile.end()) - profile.begin();
    CHECK(std::abs(dp_grid.x(peak) - 2.0 * q) < 2.0 * dp_grid.spacing());

    double integral = 0.0;
    const std::vector<double> wts = dp_grid.trapezoid_weights();
    for (std::size_t l = 0; l < profile.size(); ++l) integral += wts[l] * profile[l];
    CHECK(std::abs(integral - 1.0) < 2e-2);
}
