#include <cmath>

#include "doctest.h"
#include "errors.hpp"
#include "potential.hpp"
#include "shooting.hpp"

using namespace qhj;

namespace {

double s0_constant_force(double a, double q1, double Q2, double t) {
    const double d = q1 - Q2;
    return d * d / (2.0 * t) + 0.5 * a * t * (q1 + Q2) - a * a * t * t * t / 24.0;
}

double s0_harmonic(double q1, double Q2, double t) {
    return 0.5 * (q1 * q1 + Q2 * Q2) / std::tan(t) - q1 * Q2 / std::sin(t);
}

}  // namespace

TEST_CASE("free-particle principal function and derivatives") {
    auto pot = Potential::free();
    const double q1 = 1.7, Q2 = -0.4, t = 0.8;
    auto s = principal_function_sample(pot, q1, Q2, t);
    const double d = q1 - Q2;
    CHECK(s.S0 == doctest::Approx(d * d / (2.0 * t)).epsilon(1e-12));
    CHECK(s.dS0_dq1 == doctest::Approx(d / t).epsilon(1e-7));
    CHECK(s.dS0_dQ2 == doctest::Approx(-d / t).epsilon(1e-7));
    CHECK(s.d2S0_dq1dQ2 == doctest::Approx(-1.0 / t).epsilon(1e-6));
    CHECK(hj_residual(pot, q1, Q2, t) < 1e-6);
}

TEST_CASE("constant-force principal function at several points") {
    const double a = 1.0;
    auto pot = Potential::constant_force(a);
    for (double t : {0.3, 0.7, 1.2}) {
        for (double q1 : {-1.0, 0.5, 2.0}) {
            const double Q2 = -0.6;
            auto r = solve_two_point(pot, Q2, q1, t);
            CHECK(std::abs(r.trajectory.action_final() -
                           s0_constant_force(a, q1, Q2, t)) < 1e-10);
        }
    }
}

TEST_CASE("harmonic principal function including beyond the quarter period") {
    auto pot = Potential::harmonic(1.0);
    for (double t : {0.4, 0.9, 2.2}) {
        const double q1 = 1.1, Q2 = 0.3;
        auto r = solve_two_point(pot, Q2, q1, t);
        CHECK(std::abs(r.trajectory.action_final() - s0_harmonic(q1, Q2, t)) < 1e-9);
    }
}

TEST_CASE("first derivatives agree with trajectory endpoint momenta") {
    auto pot = Potential::harmonic(1.0);
    auto s = principal_function_sample(pot, 0.9, -0.2, 1.1);
    // dS0/dq1 is the arrival momentum, dS0/dQ2 minus the departure momentum.
    CHECK(std::abs(s.dS0_dq1 - s.arrival_p) < 1e-5);
    CHECK(std::abs(s.dS0_dQ2 + s.departure_p) < 1e-5);
    // Closed form for the mixed partial: -csc t.
    CHECK(s.d2S0_dq1dQ2 == doctest::Approx(-1.0 / std::sin(1.1)).epsilon(1e-5));
}

TEST_CASE("caustic guards") {
    auto pot = Potential::harmonic(1.0);
    // Focal point of the oscillator: every trajectory from Q2 refocuses at
    // t = pi, so the endpoint map loses rank there.
    CHECK_THROWS_AS(solve_two_point(pot, 0.3, 0.5, M_PI), CausticError);
    // Short-time guard.
    CHECK_THROWS_AS(solve_two_point(Potential::free(), 0.0, 0.1, 1e-4), CausticError);
}

TEST_CASE("anharmonic shooting converges and satisfies the HJ equation") {
    auto pot = Potential::polynomial({0.0, 0.0, 0.5, 0.05});
    auto r = solve_two_point(pot, -0.8, 1.3, 1.4);
    CHECK(std::abs(r.trajectory.q_final() - 1.3) < 1e-12);
    CHECK(std::abs(r.trajectory.q[0] + 0.8) == 0.0);
    CHECK(hj_residual(pot, 1.3, -0.8, 1.4) < 1e-5);
}

TEST_CASE("steep quartic well uses continuation when the direct guess stalls") {
    auto pot = Potential::polynomial({0.0, 0.0, 0.0, 0.0, 0.25});
    auto r = solve_two_point(pot, -1.5, 1.5, 2.0);
    CHECK(std::abs(r.trajectory.q_final() - 1.5) < 1e-12);
    const double e0 = 0.5 * r.p0 * r.p0 + pot.value(-1.5, 0.0);
    const double e1 = 0.5 * r.trajectory.p_final() * r.trajectory.p_final() +
                      pot.value(1.5, 2.0);
    CHECK(e0 == doctest::Approx(e1).epsilon(1e-9));
}
