#pragma once

#include <complex>
#include <vector>

#include "grid.hpp"
#include "potential.hpp"

namespace qhj {

using complex = std::complex<double>;

/* The four generating-function types, tagged by their argument pair:
 * F1(q,Q), F2(q,P), F3(p,Q), F4(p,P). Lowercase arguments are the old
 * (untransformed) variables, uppercase the new ones. */
enum class GfType { F1 = 1, F2, F3, F4 };

const char* gf_type_name(GfType t);

/* Generating function quadratic in its two arguments,
 *
 *   S(x,y) = alpha x^2/2 + beta x y + gamma y^2/2 + u x + v y + c,
 *
 * with real quadratic and linear coefficients and a complex constant. The
 * constant's imaginary part carries the normalization of the unitary kernel
 * e^{iS/hbar}; for the closed forms it is an unwrapped logarithm in t, so the
 * kernel prefactor picks up a -pi/2 phase at each focal point crossed. */
struct QuadraticGeneratingFunction {
    GfType type = GfType::F1;
    double hbar = 1.0;
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
    double u = 0.0, v = 0.0;
    complex c = 0.0;

    complex value(double x, double y) const {
        return complex(0.5 * alpha * x * x + beta * x * y + 0.5 * gamma * y * y +
                       u * x + v * y) + c;
    }
    /* e^{i S(x,y)/hbar}. */
    complex kernel(double x, double y) const;

    /* dS/dx and dS/dy (real parts; the constant drops out). */
    double dx(double x, double y) const { return alpha * x + beta * y + u; }
    double dy(double x, double y) const { return beta * x + gamma * y + v; }
};

/* Closed-form generating functions for quadratic Hamiltonians. Supported
 * pairs: F1 and F2 for free/constant-force/harmonic potentials (quadratic
 * polynomials reduce to these when the mapping is exact). Throws CausticError
 * at excluded times (focal points of the requested representation) and
 * UnsupportedPotentialError for anything without a tabulated form. */
QuadraticGeneratingFunction closed_form_generating(const Potential& pot, GfType type,
                                                   double t, double hbar);

/* Exact Fresnel-integral conversion between generating-function types. One or
 * two of the Fourier-type transform steps below, each integrating out one
 * variable; throws DegenerateQuadraticError when the variable to integrate
 * appears only linearly (the transform is a delta kernel, not a quadratic
 * form). */
QuadraticGeneratingFunction convert_type(const QuadraticGeneratingFunction& gf,
                                         GfType target);

/* Linear canonical transformation (Q,P) in terms of (q,p):
 *   Q = a q + b p + e,  P = c q + d p + f,   with a d - b c = 1. */
struct LinearCanonicalMap {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
    double e = 0.0, f = 0.0;

    double det() const { return a * d - b * c; }
    void apply(double q, double p, double* Q, double* P) const {
        *Q = a * q + b * p + e;
        *P = c * q + d * p + f;
    }
    LinearCanonicalMap inverse() const;
    /* this after other: z -> this(other(z)). */
    LinearCanonicalMap compose(const LinearCanonicalMap& other) const;
};

/* Reads the classical map off the stationary-phase relations of the real part
 * of the quadratic form. Requires beta != 0. */
LinearCanonicalMap extract_canonical_map(const QuadraticGeneratingFunction& gf);

/* Momentum-shear family F2 = q P + g(q) + (i hbar/2) ln(2 pi hbar) with g a
 * polynomial. Induces the gauge map Q = q, P = p - g'(q). */
struct GaugeFunction {
    std::vector<double> coeffs;  // g(q) = sum coeffs[k] q^k
    double hbar = 1.0;

    double g(double q) const;
    double dg(double q) const;
    bool is_quadratic() const;
    /* Exact representation as a quadratic F2; throws for deg(g) > 2. */
    QuadraticGeneratingFunction to_quadratic() const;
};

GaugeFunction gauge_generating_function(std::vector<double> g_coeffs, double hbar);

/* Discrete unitarity of the kernel e^{iS/hbar} on truncated grids: forms the
 * Gram matrix A(x,x') = sum_j w_j K(x,y_j) conj(K(x',y_j)) with uniform
 * (periodic-rule) weights, appropriate for the non-decaying oscillatory
 * integrand, and compares dx * A against the identity. A discrete delta is
 * only representable when the kernel's mixed-phase scale, the spacings and
 * hbar satisfy the grid reciprocity relation |beta| dx dy N = 2 pi hbar; the
 * report carries the measured deviations either way. */
struct UnitarityReport {
    double max_diag_deviation = 0.0;  // max_i |dx A(i,i) - 1|
    double max_offdiag = 0.0;         // max_{i != i'} dx |A(i,i')|
    double deviation() const {
        return max_diag_deviation > max_offdiag ? max_diag_deviation : max_offdiag;
    }
};

UnitarityReport verify_unitarity(const QuadraticGeneratingFunction& gf,
                                 const Grid1D& x_grid, const Grid1D& y_grid);

/* The hbar satisfying the reciprocity relation above for a kernel with mixed
 * coefficient beta on matched grids of spacing dx and dy with n samples. */
double reciprocity_hbar(double beta, double dx, double dy, std::size_t n);

}  // namespace qhj
