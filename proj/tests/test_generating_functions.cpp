#include <cmath>
#include <complex>

#include "doctest.h"
#include "errors.hpp"
#include "generating_function.hpp"
#include "grid.hpp"

using namespace qhj;

namespace {

void check_close(complex a, complex b, double tol) {
    CHECK(std::abs(a - b) < tol);
}

}  // namespace

TEST_CASE("constant-force F1 closed form has the documented coefficients") {
    const double a = 1.0, t = 0.5, hbar = 0.7;
    auto g = closed_form_generating(Potential::constant_force(a), GfType::F1, t, hbar);
    CHECK(g.alpha == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(g.beta == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(g.gamma == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(g.u == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(g.v == doctest::Approx(0.25).epsilon(1e-14));
    // Constant: -a^2 t^3/24 + (i hbar/2) ln(i 2 pi hbar t).
    const complex expect = complex(-1.0 / 192.0, 0.0) +
                           complex(0.0, 0.5 * hbar) *
                               std::log(complex(0.0, 2.0 * M_PI * hbar * t));
    check_close(g.c, expect, 1e-14);
    // Kernel modulus is the free-particle Fresnel prefactor (2 pi hbar t)^{-1/2}.
    CHECK(std::abs(g.kernel(0.3, -0.2)) ==
          doctest::Approx(1.0 / std::sqrt(2.0 * M_PI * hbar * t)).epsilon(1e-13));
}

TEST_CASE("harmonic F1 closed form: cot/csc coefficients and log constant") {
    const double t = 0.9, hbar = 1.0;
    auto g = closed_form_generating(Potential::harmonic(1.0), GfType::F1, t, hbar);
    CHECK(g.alpha == doctest::Approx(1.0 / std::tan(t)).epsilon(1e-14));
    CHECK(g.gamma == doctest::Approx(1.0 / std::tan(t)).epsilon(1e-14));
    CHECK(g.beta == doctest::Approx(-1.0 / std::sin(t)).epsilon(1e-14));
    const complex expect = complex(0.0, 0.5) *
                           std::log(complex(0.0, 2.0 * M_PI * std::sin(t)));
    check_close(g.c, expect, 1e-14);
}

TEST_CASE("free-particle F2 closed form") {
    const double t = 1.3, hbar = 0.5;
    auto g = closed_form_generating(Potential::free(), GfType::F2, t, hbar);
    CHECK(g.alpha == 0.0);
    CHECK(g.beta == 1.0);
    CHECK(g.gamma == doctest::Approx(-t).epsilon(1e-14));
    CHECK(g.u == 0.0);
    CHECK(g.v == 0.0);
    check_close(g.c, complex(0.0, 0.5 * hbar * std::log(2.0 * M_PI * hbar)), 1e-14);
    // t = 0 is regular for F2 and generates the identity relabeling q -> Q.
    auto id = closed_form_generating(Potential::free(), GfType::F2, 0.0, hbar);
    auto m = extract_canonical_map(id);
    CHECK(m.a == doctest::Approx(1.0));
    CHECK(m.b == doctest::Approx(0.0));
    CHECK(m.c == doctest::Approx(0.0));
    CHECK(m.d == doctest::Approx(1.0));
}

TEST_CASE("converted harmonic F1 -> F2 reproduces the tabulated F2") {
    for (double t : {0.3, 0.7, 1.1}) {
        auto f1 = closed_form_generating(Potential::harmonic(1.0), GfType::F1, t, 1.0);
        auto f2 = convert_type(f1, GfType::F2);
        auto tab = closed_form_generating(Potential::harmonic(1.0), GfType::F2, t, 1.0);
        CHECK(f2.type == GfType::F2);
        CHECK(std::abs(f2.alpha - (-std::tan(t))) < 1e-10);
        CHECK(std::abs(f2.beta - 1.0 / std::cos(t)) < 1e-10);
        CHECK(std::abs(f2.gamma - (-std::tan(t))) < 1e-10);
        CHECK(std::abs(f2.alpha - tab.alpha) < 1e-12);
        CHECK(std::abs(f2.beta - tab.beta) < 1e-12);
        CHECK(std::abs(f2.gamma - tab.gamma) < 1e-12);
        check_close(f2.c, tab.c, 1e-12);
    }
}

TEST_CASE("type conversions invert exactly") {
    auto cf = closed_form_generating(Potential::constant_force(1.3), GfType::F1, 0.8, 0.6);
    auto ho = closed_form_generating(Potential::harmonic(1.0), GfType::F1, 1.1, 0.6);
    auto roundtrip = [](const QuadraticGeneratingFunction& f1, GfType mid) {
        auto back = convert_type(convert_type(f1, mid), GfType::F1);
        CHECK(std::abs(back.alpha - f1.alpha) < 1e-12);
        CHECK(std::abs(back.beta - f1.beta) < 1e-12);
        CHECK(std::abs(back.gamma - f1.gamma) < 1e-12);
        CHECK(std::abs(back.u - f1.u) < 1e-12);
        CHECK(std::abs(back.v - f1.v) < 1e-12);
        check_close(back.c, f1.c, 1e-12);
    };
    roundtrip(cf, GfType::F2);
    roundtrip(cf, GfType::F3);
    for (GfType mid : {GfType::F2, GfType::F3, GfType::F4}) roundtrip(ho, mid);
    // Constant force shifts momentum deterministically, so its momentum-side
    // kernel is a delta: the F4 form does not exist as a quadratic.
    CHECK_THROWS_AS(convert_type(cf, GfType::F4), DegenerateQuadraticError);
}

TEST_CASE("all four types describe the same classical map") {
    // t = 1.1 sits away from every representation's focal times, so all four
    // forms exist and must agree on the underlying linear map.
    auto f1 = closed_form_generating(Potential::harmonic(1.0), GfType::F1, 1.1, 1.0);
    auto m1 = extract_canonical_map(f1);
    for (GfType ty : {GfType::F2, GfType::F3, GfType::F4}) {
        auto m = extract_canonical_map(convert_type(f1, ty));
        CHECK(std::abs(m.a - m1.a) < 1e-12);
        CHECK(std::abs(m.b - m1.b) < 1e-12);
        CHECK(std::abs(m.c - m1.c) < 1e-12);
        CHECK(std::abs(m.d - m1.d) < 1e-12);
        CHECK(std::abs(m.e - m1.e) < 1e-12);
        CHECK(std::abs(m.f - m1.f) < 1e-12);
    }
}

TEST_CASE("extracted maps match the classical flow") {
    const double t = 1.1;
    auto mh = extract_canonical_map(
        closed_form_generating(Potential::harmonic(1.0), GfType::F1, t, 1.0));
    // (Q,P) traces the initial condition backward: Q = q cos t - p sin t.
    CHECK(mh.a == doctest::Approx(std::cos(t)).epsilon(1e-13));
    CHECK(mh.b == doctest::Approx(-std::sin(t)).epsilon(1e-13));
    CHECK(mh.c == doctest::Approx(std::sin(t)).epsilon(1e-13));
    CHECK(mh.d == doctest::Approx(std::cos(t)).epsilon(1e-13));
    CHECK(mh.det() == doctest::Approx(1.0).epsilon(1e-13));

    const double a = 2.0;
    auto mc = extract_canonical_map(
        closed_form_generating(Potential::constant_force(a), GfType::F1, t, 1.0));
    CHECK(mc.a == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(mc.b == doctest::Approx(-t).epsilon(1e-13));
    CHECK(mc.e == doctest::Approx(0.5 * a * t * t).epsilon(1e-13));
    CHECK(mc.c == doctest::Approx(0.0));
    CHECK(mc.d == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(mc.f == doctest::Approx(-a * t).epsilon(1e-13));

    // Composition with the inverse is the identity.
    auto id = mc.compose(mc.inverse());
    CHECK(id.a == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(id.b == doctest::Approx(0.0));
    CHECK(id.e == doctest::Approx(0.0));
}

TEST_CASE("gauge family: quadratic g reduces to a shear map") {
    const double lam = 0.35;
    auto gf = gauge_generating_function({0.0, 0.0, lam}, 1.0);
    CHECK(gf.is_quadratic());
    auto q = gf.to_quadratic();
    auto m = extract_canonical_map(q);
    CHECK(m.a == doctest::Approx(1.0));
    CHECK(m.b == doctest::Approx(0.0));
    CHECK(m.c == doctest::Approx(-2.0 * lam).epsilon(1e-13));
    CHECK(m.d == doctest::Approx(1.0));

    auto cubic = gauge_generating_function({0.0, 0.0, 0.0, 1.0}, 1.0);
    CHECK_FALSE(cubic.is_quadratic());
    CHECK_THROWS_AS(cubic.to_quadratic(), DegenerateQuadraticError);
    // gamma = 0 makes the F2 -> F1 transform a delta kernel.
    CHECK_THROWS_AS(convert_type(q, GfType::F1), DegenerateQuadraticError);
}

TEST_CASE("closed-form guards") {
    auto h = Potential::harmonic(1.0);
    CHECK_THROWS_AS(closed_form_generating(h, GfType::F1, M_PI, 1.0), CausticError);
    CHECK_THROWS_AS(closed_form_generating(h, GfType::F2, 0.5 * M_PI, 1.0), CausticError);
    CHECK_THROWS_AS(closed_form_generating(Potential::free(), GfType::F1, 1e-4, 1.0),
                    CausticError);
    CHECK_THROWS_AS(
        closed_form_generating(Potential::polynomial({0.0, 0.0, 0.5, 0.05}),
                               GfType::F1, 0.5, 1.0),
        UnsupportedPotentialError);
    CHECK_THROWS_AS(
        closed_form_generating(Potential::polynomial({0.0, 1.0, 0.5}), GfType::F1,
                               0.5, 1.0),
        UnsupportedPotentialError);
    CHECK_THROWS_AS(closed_form_generating(h, GfType::F3, 0.5, 1.0),
                    UnsupportedPotentialError);
    // Quadratic polynomial routes to the same table as the named kinds.
    auto via_poly = closed_form_generating(Potential::polynomial({0.0, -2.0}),
                                           GfType::F1, 0.5, 1.0);
    auto direct = closed_form_generating(Potential::constant_force(2.0), GfType::F1,
                                         0.5, 1.0);
    CHECK(via_poly.u == doctest::Approx(direct.u));
    check_close(via_poly.c, direct.c, 1e-14);
}

TEST_CASE("kernel prefactor phase beyond the first focal point") {
    // One focal crossing appends -pi/2: at t = 1.2 pi the constant-induced
    // prefactor is (2 pi hbar |sin t|)^{-1/2} exp(-i 3 pi/4).
    const double t = 1.2 * M_PI;
    auto g = closed_form_generating(Potential::harmonic(1.0), GfType::F1, t, 1.0);
    const complex pref = std::exp(complex(0.0, 1.0) * g.c / g.hbar);
    const double mag = 1.0 / std::sqrt(2.0 * M_PI * std::abs(std::sin(t)));
    check_close(pref, mag * std::polar(1.0, -0.75 * M_PI), 1e-13);
}

TEST_CASE("discrete unitarity at grid reciprocity") {
    Grid1D grid(-8.0, 8.0, 512);
    const double t = 0.25 * M_PI;
    const double beta = 1.0 / std::sin(t);
    const double hbar =
        reciprocity_hbar(beta, grid.spacing(), grid.spacing(), grid.size());
    auto g = closed_form_generating(Potential::harmonic(1.0), GfType::F1, t, hbar);
    auto rep = verify_unitarity(g, grid, grid);
    CHECK(rep.deviation() < 1e-3);
    CHECK(rep.deviation() < 1e-10);  // exact DFT cancellation, not merely small

    // A wrong normalization constant must be detected.
    auto bad = g;
    bad.c += complex(0.0, 0.2 * hbar);
    auto rep_bad = verify_unitarity(bad, grid, grid);
    CHECK(rep_bad.deviation() > 0.2);

    // Off reciprocity (hbar = 1 on the same grids) the truncated kernel cannot
    // represent the discrete delta at all.
    auto g1 = closed_form_generating(Potential::harmonic(1.0), GfType::F1, t, 1.0);
    CHECK(verify_unitarity(g1, grid, grid).deviation() > 0.5);

    CHECK_THROWS_AS(verify_unitarity(convert_type(g, GfType::F3), grid, grid),
                    UnsupportedPotentialError);
}
