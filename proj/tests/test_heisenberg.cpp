#include <cmath>

#include "doctest.h"
#include "errors.hpp"
#include "heisenberg.hpp"
#include "hj_series.hpp"

using namespace qhj;

TEST_CASE("operator flow under a constant force is the closed affine map") {
    const double a = 2.0, t = 0.8;
    QuadraticGeneratingFunction gf =
        closed_form_generating(Potential::constant_force(a), GfType::F1, t, 1.0);
    HeisenbergSolution sol = heisenberg_from_generating(gf, t);

    CHECK(std::abs(sol.qq - 1.0) < 1e-10);
    CHECK(std::abs(sol.qp - t) < 1e-10);
    CHECK(std::abs(sol.q0 - 0.5 * a * t * t) < 1e-10);
    CHECK(std::abs(sol.pq - 0.0) < 1e-10);
    CHECK(std::abs(sol.pp - 1.0) < 1e-10);
    CHECK(std::abs(sol.p0 - a * t) < 1e-10);
    CHECK(std::abs(sol.commutator_defect()) < 1e-12);
}

TEST_CASE("operator flow under a harmonic potential is the phase-space rotation") {
    const double t = 0.6;
    Potential pot = Potential::harmonic(1.0);
    for (GfType type : {GfType::F1, GfType::F2}) {
        QuadraticGeneratingFunction gf = closed_form_generating(pot, type, t, 1.0);
        HeisenbergSolution sol = heisenberg_from_generating(gf, t);
        CHECK(std::abs(sol.qq - std::cos(t)) < 1e-10);
        CHECK(std::abs(sol.qp - std::sin(t)) < 1e-10);
        CHECK(std::abs(sol.pq + std::sin(t)) < 1e-10);
        CHECK(std::abs(sol.pp - std::cos(t)) < 1e-10);
        CHECK(std::abs(sol.q0) < 1e-10);
        CHECK(std::abs(sol.p0) < 1e-10);
    }
}

TEST_CASE("affine coefficients satisfy the operator equations of motion") {
    Potential harm = Potential::harmonic(1.0);
    auto harm_family = [&](double t) {
        return heisenberg_from_generating(
            closed_form_generating(harm, GfType::F1, t, 1.0), t);
    };
    HeisenbergResidual r = verify_heisenberg_equations(harm, harm_family, 0.9);
    CHECK(r.max_eom_residual < 1e-6);
    CHECK(r.commutator_defect < 1e-12);

    Potential force = Potential::constant_force(1.5);
    auto force_family = [&](double t) {
        return heisenberg_from_generating(
            closed_form_generating(force, GfType::F1, t, 1.0), t);
    };
    r = verify_heisenberg_equations(force, force_family, 0.7);
    CHECK(r.max_eom_residual < 1e-9);
}

TEST_CASE("exchange-family operators obey the harmonic equations of motion") {
    // The family whose t = 0 member swaps position and momentum evolves under
    // the unit-frequency harmonic Hamiltonian; its operator flow must satisfy
    // the same equations even though the t = 0 map is not the identity.
    Potential harm = Potential::harmonic(1.0);
    auto family = [](double t) {
        return heisenberg_from_generating(exchange_generating_function(t, 1.0), t);
    };
    HeisenbergResidual r = verify_heisenberg_equations(harm, family, 0.4);
    CHECK(r.max_eom_residual < 1e-6);
    CHECK(r.commutator_defect < 1e-12);

    HeisenbergSolution at0 = family(0.0);
    CHECK(std::abs(at0.qq) < 1e-12);
    CHECK(std::abs(at0.qp + 1.0) < 1e-12);  // q_H(0) = -p
    CHECK(std::abs(at0.pq - 1.0) < 1e-12);  // p_H(0) = q
    CHECK(std::abs(at0.pp) < 1e-12);
}

TEST_CASE("predicted means agree with the independent integrator") {
    {
        Grid1D grid(-10.0, 10.0, 512);
        Potential pot = Potential::constant_force(1.0);
        WaveFunction psi0 = make_gaussian(grid, -1.0, 0.3, 0.8, 1.0);
        HeisenbergSolution sol = heisenberg_from_generating(
            closed_form_generating(pot, GfType::F1, 1.0, 1.0), 1.0);
        EhrenfestReport rep = ehrenfest_crosscheck(pot, sol, psi0);
        CHECK(rep.predicted_q == doctest::Approx(-0.2).epsilon(1e-12));
        CHECK(rep.predicted_p == doctest::Approx(1.3).epsilon(1e-12));
        CHECK(rep.max_error() < 1e-6);
    }
    {
        Grid1D grid(-8.0, 8.0, 512);
        Potential pot = Potential::harmonic(1.0);
        WaveFunction psi0 = make_gaussian(grid, 1.0, 0.0, std::sqrt(0.5), 1.0);
        HeisenbergSolution sol = heisenberg_from_generating(
            closed_form_generating(pot, GfType::F1, 0.9, 1.0), 0.9);
        EhrenfestReport rep = ehrenfest_crosscheck(pot, sol, psi0);
        CHECK(rep.max_error() < 1e-6);
    }
}

TEST_CASE("equation verification guards its preconditions") {
    Potential cubic = Potential::polynomial({0.0, 0.0, 0.5, 0.1});
    auto bogus = [](double t) {
        HeisenbergSolution s;
        s.t = t;
        return s;
    };
    CHECK_THROWS_AS(verify_heisenberg_equations(cubic, bogus, 0.5),
                    UnsupportedPotentialError);
    CHECK_THROWS_AS(
        verify_heisenberg_equations(Potential::harmonic(1.0), bogus, 1e-3, 1e-3),
        InvalidArgumentError);
}
