#include <cmath>
#include <complex>

#include "doctest.h"
#include "errors.hpp"
#include "propagator.hpp"
#include "split_step.hpp"

using namespace qhj;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("split-step free packet reproduces ballistic spreading") {
    Grid1D grid(-10.0, 10.0, 256);
    WaveFunction psi0 = make_gaussian(grid, 0.0, 0.0, 1.0, 1.0);
    WaveFunction psi = split_step_evolve(Potential::free(), psi0, 1.0);
    CHECK(std::abs(psi.norm() - 1.0) < 1e-10);
    // Var q(t) = sigma^2 + t^2 sigma_p^2 with sigma_p = hbar / (2 sigma).
    CHECK(psi.variance_q() == doctest::Approx(1.25).epsilon(1e-6));
    CHECK(std::abs(psi.expectation_q()) < 1e-9);
}

TEST_CASE("split-step means follow the classical path under a constant force") {
    Grid1D grid(-10.0, 10.0, 512);
    WaveFunction psi0 = make_gaussian(grid, -1.0, 0.3, 0.8, 1.0);
    WaveFunction psi = split_step_evolve(Potential::constant_force(1.0), psi0, 1.0);
    CHECK(psi.expectation_q() == doctest::Approx(-0.2).epsilon(1e-6));
    CHECK(psi.expectation_p() == doctest::Approx(1.3).epsilon(1e-6));
}

TEST_CASE("split-step self-convergence gate rejects gross under-resolution") {
    Grid1D grid(-8.0, 8.0, 256);
    WaveFunction psi0 = make_gaussian(grid, 0.0, 0.0, 1.0, 1.0);
    SplitStepOptions opt;
    opt.n_steps = 2;
    CHECK_THROWS_AS(split_step_evolve(Potential::harmonic(1.0), psi0, 1.0, opt),
                    ConvergenceGateError);
}

TEST_CASE("kernel evolution matches the independent integrator, constant force") {
    Grid1D grid(-10.0, 10.0, 512);
    const double hbar = 1.0;
    Potential pot = Potential::constant_force(1.0);
    WaveFunction psi0 = make_gaussian(grid, -1.0, 0.3, 0.8, hbar);

    QuadraticGeneratingFunction gf = closed_form_generating(pot, GfType::F1, 1.0, hbar);
    PropagatorMatrix k = build_propagator(gf, grid, grid);
    WaveFunction via_kernel = k.apply(psi0);
    WaveFunction via_oracle = split_step_evolve(pot, psi0, 1.0);

    OracleComparison cmp = compare_states(via_kernel, via_oracle);
    CHECK(cmp.l2_error < 1e-5);             // absolute phase included
    CHECK(std::abs(cmp.norm_left - 1.0) < 1e-6);
}

TEST_CASE("kernel evolution matches the independent integrator, harmonic") {
    Grid1D grid(-8.0, 8.0, 512);
    const double hbar = 1.0;
    Potential pot = Potential::harmonic(1.0);
    WaveFunction psi0 = make_gaussian(grid, 1.0, 0.0, std::sqrt(0.5), hbar);

    const double t = 0.25 * kPi;
    QuadraticGeneratingFunction gf = closed_form_generating(pot, GfType::F1, t, hbar);
    WaveFunction via_kernel = build_propagator(gf, grid, grid).apply(psi0);
    WaveFunction via_oracle = split_step_evolve(pot, psi0, t);

    CHECK(l2_distance(via_kernel, via_oracle) < 1e-5);
    // Coherent-state center rotates clockwise in phase space.
    CHECK(via_kernel.expectation_q() == doctest::Approx(std::cos(t)).epsilon(1e-5));
    CHECK(via_kernel.expectation_p() == doctest::Approx(-std::sin(t)).epsilon(1e-5));
}

TEST_CASE("full-period composition revives the initial state with phase -1") {
    Grid1D grid(-8.0, 8.0, 512);
    WaveFunction psi0 = make_gaussian(grid, 1.0, 0.0, std::sqrt(0.5), 1.0);
    WaveFunction rev = evolve_quadratic(Potential::harmonic(1.0), psi0, 2.0 * kPi);

    CHECK(fidelity(rev, psi0) > 1.0 - 1e-3);
    // U(2 pi) = exp(-2 pi i (n + 1/2)) = -1 on every eigenstate.
    complex overlap = inner_product(psi0, rev);
    CHECK(std::real(overlap) == doctest::Approx(-1.0).epsilon(1e-5));
    CHECK(std::abs(std::imag(overlap)) < 1e-5);
}

TEST_CASE("composition over substeps agrees with the single long kernel") {
    Grid1D grid(-8.0, 8.0, 512);
    Potential pot = Potential::harmonic(1.0);
    WaveFunction psi0 = make_gaussian(grid, 1.0, 0.0, std::sqrt(0.5), 1.0);

    auto kernel_at = [&](double t) {
        return build_propagator(closed_form_generating(pot, GfType::F1, t, 1.0),
                                grid, grid);
    };
    WaveFunction direct = kernel_at(0.9).apply(psi0);
    WaveFunction composed = kernel_at(0.5).apply(kernel_at(0.4).apply(psi0));
    CHECK(l2_distance(direct, composed) < 1e-6);
}

TEST_CASE("kernel branch stays continuous across the focal point") {
    // A single kernel past the first focus carries the extra -pi/2 in its
    // constant; composing two pre-focus kernels must land on the same state.
    Grid1D grid(-8.0, 8.0, 512);
    Potential pot = Potential::harmonic(1.0);
    WaveFunction psi0 = make_gaussian(grid, 1.0, 0.0, std::sqrt(0.5), 1.0);

    const double t = 1.2 * kPi;
    WaveFunction direct =
        build_propagator(closed_form_generating(pot, GfType::F1, t, 1.0), grid, grid)
            .apply(psi0);
    PropagatorMatrix half =
        build_propagator(closed_form_generating(pot, GfType::F1, 0.6 * kPi, 1.0),
                         grid, grid);
    WaveFunction composed = half.apply(half.apply(psi0));
    CHECK(l2_distance(direct, composed) < 1e-5);
}

TEST_CASE("momentum-argument kernel evolves a state given its momentum samples") {
    Grid1D q_grid(-10.0, 10.0, 512);
    Grid1D p_grid(-8.0, 8.0, 512);
    const double hbar = 1.0;
    Potential pot = Potential::free();
    WaveFunction psi0 = make_gaussian(q_grid, 0.0, 1.5, 1.0, hbar);

    WaveFunction phi = momentum_representation(psi0, p_grid);
    CHECK(std::abs(phi.norm() - 1.0) < 1e-8);
    CHECK(phi.expectation_q() == doctest::Approx(1.5).epsilon(1e-8));  // mean momentum
    CHECK(phi.variance_q() == doctest::Approx(0.25).epsilon(1e-6));

    const double t = 0.8;
    QuadraticGeneratingFunction gf = closed_form_generating(pot, GfType::F2, t, hbar);
    WaveFunction via_kernel = build_propagator(gf, q_grid, p_grid).apply(phi);
    WaveFunction via_oracle = split_step_evolve(pot, psi0, t);
    CHECK(l2_distance(via_kernel, via_oracle) < 1e-5);
}

TEST_CASE("transformed representation of an evolving state stays constant") {
    // psi(t) = K(t) psi_Q with a time-independent psi_Q; reconstructing psi_Q
    // by the adjoint at different times must give the same function, equal to
    // psi(0). The floor is the window sinc resolution, not machine precision.
    Grid1D grid(-12.0, 12.0, 1280);
    Potential pot = Potential::harmonic(1.0);
    WaveFunction psi0 = make_gaussian(grid, 1.0, 0.0, std::sqrt(0.5), 1.0);

    auto reconstruct = [&](double t) {
        PropagatorMatrix k = build_propagator(
            closed_form_generating(pot, GfType::F1, t, 1.0), grid, grid);
        return k.apply_adjoint(k.apply(psi0));
    };
    WaveFunction a = reconstruct(0.4);
    WaveFunction b = reconstruct(0.9);
    CHECK(l2_distance(a, psi0) < 2e-3);
    CHECK(l2_distance(b, psi0) < 2e-3);
    CHECK(l2_distance(a, b) < 2e-3);
}

TEST_CASE("under-resolved kernels are rejected, not silently aliased") {
    Grid1D coarse(-8.0, 8.0, 128);
    QuadraticGeneratingFunction gf =
        closed_form_generating(Potential::free(), GfType::F1, 0.05, 1.0);
    CHECK_THROWS_AS(build_propagator(gf, coarse, coarse), AliasingError);
}

TEST_CASE("transported phase field builds the same propagator as the closed form") {
    const double hbar = 0.5;
    Potential pot = Potential::harmonic(1.0);
    Grid1D q_grid(-2.0, 2.0, 41);
    Grid1D Q_grid(-2.0, 2.0, 41);
    const double t = 0.7;

    SeriesField field = solve_series_field(pot, q_grid, Q_grid, t, hbar);
    PropagatorMatrix from_field = build_propagator(field);
    PropagatorMatrix from_table = build_propagator(
        closed_form_generating(pot, GfType::F1, t, hbar), q_grid, Q_grid);

    WaveFunction psi_Q = make_gaussian(Q_grid, 0.0, 0.3, 0.32, hbar);
    WaveFunction via_field = from_field.apply(psi_Q);
    WaveFunction via_table = from_table.apply(psi_Q);
    CHECK(l2_distance(via_field, via_table) < 1e-5);
}

TEST_CASE("quadratic-kernel evolution rejects anharmonic potentials") {
    Grid1D grid(-8.0, 8.0, 128);
    WaveFunction psi0 = make_gaussian(grid, 0.0, 0.0, 1.0, 1.0);
    Potential cubic = Potential::polynomial({0.0, 0.0, 0.5, 0.05});
    CHECK_THROWS_AS(evolve_quadratic(cubic, psi0, 0.5), UnsupportedPotentialError);
}
