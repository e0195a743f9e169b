#include <cmath>
#include <complex>

#include "doctest.h"
#include "errors.hpp"
#include "grid.hpp"
#include "wavefunction.hpp"

using namespace qhj;

TEST_CASE("grid samples are exact affine functions of the index") {
    Grid1D g(-8.0, 8.0, 512);
    CHECK(g.spacing() == doctest::Approx(16.0 / 511.0).epsilon(1e-15));
    CHECK(g.x(0) == -8.0);
    CHECK(g.x(511) == doctest::Approx(8.0).epsilon(1e-15));
    // No accumulated rounding: x(i) is computed from the index every time.
    for (std::size_t i : {1u, 7u, 255u, 510u})
        CHECK(g.x(i) == g.x_min() + static_cast<double>(i) * g.spacing());
    CHECK(g.nearest_index(g.x(300) + 0.3 * g.spacing()) == 300);
    CHECK(g.nearest_index(-100.0) == 0);
    CHECK(g.nearest_index(100.0) == 511);
}

TEST_CASE("grid rejects bad bounds and sizes") {
    CHECK_THROWS_AS(Grid1D(1.0, 1.0, 16), InvalidArgumentError);
    CHECK_THROWS_AS(Grid1D(2.0, -2.0, 16), InvalidArgumentError);
    CHECK_THROWS_AS(Grid1D(0.0, 1.0, 1), InvalidArgumentError);
}

TEST_CASE("trapezoid weights integrate smooth decaying functions accurately") {
    Grid1D g(-10.0, 10.0, 1001);
    auto w = g.trapezoid_weights();
    double s = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double x = g.x(i);
        s += w[i] * std::exp(-x * x / 2.0);
    }
    // Oracle: int exp(-x^2/2) dx = sqrt(2 pi); tails beyond |x|=10 are ~1e-23.
    CHECK(s == doctest::Approx(std::sqrt(2.0 * M_PI)).epsilon(1e-12));
}

TEST_CASE("gaussian packet is normalized and reproduces its moments") {
    Grid1D g(-12.0, 12.0, 1024);
    const double hbar = 0.7;
    auto psi = make_gaussian(g, 1.2, -0.8, 0.9, hbar);
    CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(psi.expectation_q() == doctest::Approx(1.2).epsilon(1e-10));
    CHECK(psi.variance_q() == doctest::Approx(0.81).epsilon(1e-10));
    CHECK(psi.expectation_p() == doctest::Approx(-0.8).epsilon(1e-9));
    // Minimum-uncertainty packet: sigma_p = hbar / (2 sigma_q).
    const double sp = hbar / (2.0 * 0.9);
    CHECK(psi.variance_p() == doctest::Approx(sp * sp).epsilon(1e-8));
    CHECK(psi.edge_fraction() < 1e-12);
}

TEST_CASE("gaussian packet rejects windows that truncate its tails") {
    Grid1D g(-4.0, 4.0, 256);
    // Center 5.5 widths from the nearer edge: the 5-width precondition holds
    // but erfc(5.5/sqrt(2)) ~ 3.7e-8 exceeds the 1e-8 tail budget.
    CHECK_THROWS_AS(make_gaussian(g, 0.7, 0.0, 0.6, 1.0), DomainTruncationError);
    // Center 2 widths from the edge: precondition itself fails.
    CHECK_THROWS_AS(make_gaussian(g, 2.0, 0.0, 1.0, 1.0), DomainTruncationError);
    // Comfortable margin passes.
    CHECK_NOTHROW(make_gaussian(g, 0.0, 0.0, 0.5, 1.0));
}

TEST_CASE("l2 distance and inner product against closed forms") {
    Grid1D g(-10.0, 10.0, 800);
    auto a = make_gaussian(g, 0.0, 0.0, 1.0, 1.0);
    auto b = make_gaussian(g, 0.5, 0.0, 1.0, 1.0);
    CHECK(l2_distance(a, a) == 0.0);
    // Oracle: <a,b> = exp(-d^2/(8 sigma^2)) for equal-width real Gaussians.
    const double ov = std::exp(-0.25 / 8.0);
    CHECK(std::abs(inner_product(a, b) - std::complex<double>(ov, 0.0)) < 1e-12);
    CHECK(l2_distance(a, b) == doctest::Approx(std::sqrt(2.0 - 2.0 * ov)).epsilon(1e-10));
    CHECK(fidelity(a, b) == doctest::Approx(ov * ov).epsilon(1e-10));
}

TEST_CASE("phase-aligned distance removes a global phase only") {
    Grid1D g(-10.0, 10.0, 800);
    auto a = make_gaussian(g, 0.0, 0.3, 1.0, 1.0);
    auto b = a;
    const std::complex<double> phase = std::polar(1.0, 0.77);
    for (auto& v : b.values()) v *= phase;
    CHECK(l2_distance(a, b) > 0.5);
    CHECK(l2_distance_phase_aligned(a, b) < 1e-9);
    auto c = make_gaussian(g, 0.4, 0.3, 1.0, 1.0);
    CHECK(l2_distance_phase_aligned(a, c) > 0.01);
    CHECK(l2_distance_phase_aligned(a, c) <= l2_distance(a, c) + 1e-15);
}

TEST_CASE("mismatched frames are rejected") {
    Grid1D g1(-8.0, 8.0, 256), g2(-8.0, 8.0, 257);
    auto a = make_gaussian(g1, 0.0, 0.0, 1.0, 1.0);
    auto b = make_gaussian(g2, 0.0, 0.0, 1.0, 1.0);
    CHECK_THROWS_AS(l2_distance(a, b), GridMismatchError);
    auto c = make_gaussian(g1, 0.0, 0.0, 1.0, 0.5);
    CHECK_THROWS_AS((void)inner_product(a, c), GridMismatchError);
}
