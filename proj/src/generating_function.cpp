#include "generating_function.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"

namespace qhj {

namespace {

constexpr double kDegenerateTol = 1e-12;
constexpr double kCausticTol = 1e-8;

const complex kI(0.0, 1.0);

/* (i hbar/2) * (ln mag + i arg): logarithm constants are assembled from an
 * explicitly unwrapped argument so callers control the branch. */
complex half_ihbar_log(double hbar, double mag, double arg) {
    return 0.5 * hbar * kI * complex(std::log(mag), arg);
}

}  // namespace

const char* gf_type_name(GfType t) {
    switch (t) {
        case GfType::F1: return "F1";
        case GfType::F2: return "F2";
        case GfType::F3: return "F3";
        case GfType::F4: return "F4";
    }
    return "?";
}

complex QuadraticGeneratingFunction::kernel(double x, double y) const {
    return std::exp(kI * value(x, y) / hbar);
}

namespace {

QuadraticGeneratingFunction cf_constant_force_f1(double a, double t, double hbar) {
    if (!(t >= 1e-3))
        throw CausticError("closed form: F1 needs t >= 1e-3 (kernel focuses at t=0)");
    QuadraticGeneratingFunction g;
    g.type = GfType::F1;
    g.hbar = hbar;
    g.alpha = 1.0 / t;
    g.beta = -1.0 / t;
    g.gamma = 1.0 / t;
    g.u = 0.5 * a * t;
    g.v = 0.5 * a * t;
    g.c = complex(-a * a * t * t * t / 24.0, 0.0) +
          half_ihbar_log(hbar, 2.0 * M_PI * hbar * t, 0.5 * M_PI);
    return g;
}

QuadraticGeneratingFunction cf_constant_force_f2(double a, double t, double hbar) {
    if (!(t >= 0.0))
        throw InvalidArgumentError("closed form: t must be nonnegative");
    QuadraticGeneratingFunction g;
    g.type = GfType::F2;
    g.hbar = hbar;
    g.alpha = 0.0;
    g.beta = 1.0;
    g.gamma = -t;
    g.u = a * t;
    g.v = -0.5 * a * t * t;
    g.c = complex(-a * a * t * t * t / 6.0, 0.0) +
          half_ihbar_log(hbar, 2.0 * M_PI * hbar, 0.0);
    return g;
}

QuadraticGeneratingFunction cf_harmonic_f1(double omega, double t, double hbar) {
    const double th = omega * t;
    const double s = std::sin(th);
    if (std::abs(s) < kCausticTol || !(t > 0.0))
        throw CausticError("closed form: harmonic F1 focuses at t = n pi / omega");
    // Each focal point crossed appends a -pi/2 phase to the kernel prefactor.
    const double m = std::floor(th / M_PI);
    QuadraticGeneratingFunction g;
    g.type = GfType::F1;
    g.hbar = hbar;
    g.alpha = omega * std::cos(th) / s;
    g.beta = -omega / s;
    g.gamma = g.alpha;
    g.c = half_ihbar_log(hbar, 2.0 * M_PI * hbar * std::abs(s) / omega,
                         0.5 * M_PI + M_PI * m);
    return g;
}

QuadraticGeneratingFunction cf_harmonic_f2(double omega, double t, double hbar) {
    const double th = omega * t;
    const double co = std::cos(th);
    if (std::abs(co) < kCausticTol || !(t >= 0.0))
        throw CausticError(
            "closed form: harmonic F2 focuses at t = (n + 1/2) pi / omega");
    const double m = std::floor(th / M_PI + 0.5);
    QuadraticGeneratingFunction g;
    g.type = GfType::F2;
    g.hbar = hbar;
    g.alpha = -omega * std::tan(th);
    g.beta = 1.0 / co;
    g.gamma = -std::tan(th) / omega;
    g.c = half_ihbar_log(hbar, 2.0 * M_PI * hbar * std::abs(co), M_PI * m);
    return g;
}

}  // namespace

QuadraticGeneratingFunction closed_form_generating(const Potential& pot, GfType type,
                                                   double t, double hbar) {
    if (!(hbar > 0.0))
        throw InvalidArgumentError("closed form: hbar must be positive");
    if (type == GfType::F3 || type == GfType::F4)
        throw UnsupportedPotentialError(
            "closed form: only F1 and F2 forms are tabulated; use convert_type");
    if (!pot.is_quadratic())
        throw UnsupportedPotentialError(
            "closed form: potential is not quadratic; use the series solver");

    double a = 0.0, omega = 0.0, offset = 0.0;
    bool harmonic = false;
    if (const auto* h = std::get_if<HarmonicPotential>(&pot.spec())) {
        harmonic = true;
        omega = h->omega;
    } else if (const auto* f = std::get_if<ConstantForcePotential>(&pot.spec())) {
        a = f->a;
    } else if (const auto* p = std::get_if<PolynomialPotential>(&pot.spec())) {
        const auto& cs = p->coeffs;
        const double c0 = cs.size() > 0 ? cs[0] : 0.0;
        const double c1 = cs.size() > 1 ? cs[1] : 0.0;
        const double c2 = cs.size() > 2 ? cs[2] : 0.0;
        offset = c0;
        if (c2 == 0.0) {
            a = -c1;
        } else if (c1 == 0.0) {
            harmonic = true;
            omega = std::sqrt(2.0 * c2);
        } else {
            throw UnsupportedPotentialError(
                "closed form: shifted oscillator (linear + quadratic) not tabulated");
        }
    }

    QuadraticGeneratingFunction g =
        harmonic ? (type == GfType::F1 ? cf_harmonic_f1(omega, t, hbar)
                                       : cf_harmonic_f2(omega, t, hbar))
                 : (type == GfType::F1 ? cf_constant_force_f1(a, t, hbar)
                                       : cf_constant_force_f2(a, t, hbar));
    // A constant energy offset only contributes the phase -offset * t.
    g.c += complex(-offset * t, 0.0);
    return g;
}

namespace {

/* One Fourier-type transform step: integrate out one argument of the
 * quadratic form against the coupling sigma * (old variable) * (new variable),
 * with the 1/sqrt(2 pi hbar) measure. The completed square contributes
 * -w^2/(2s) and the Fresnel integral the constant (i hbar/2) Log(-i s), the
 * principal branch being the i-epsilon regularization for real s. */
QuadraticGeneratingFunction integrate_second(const QuadraticGeneratingFunction& g,
                                             double sigma, GfType new_type) {
    const double s = g.gamma;
    if (std::abs(s) < kDegenerateTol)
        throw DegenerateQuadraticError(
            "convert_type: integrated variable appears only linearly; the "
            "transform is a delta kernel, not a quadratic form");
    QuadraticGeneratingFunction r;
    r.type = new_type;
    r.hbar = g.hbar;
    r.alpha = g.alpha - g.beta * g.beta / s;
    r.beta = -sigma * g.beta / s;
    r.gamma = -1.0 / s;
    r.u = g.u - g.beta * g.v / s;
    r.v = -sigma * g.v / s;
    r.c = g.c - complex(g.v * g.v / (2.0 * s), 0.0) +
          complex(0.0, 0.5 * g.hbar) * std::log(complex(0.0, -s));
    return r;
}

QuadraticGeneratingFunction integrate_first(const QuadraticGeneratingFunction& g,
                                            double sigma, GfType new_type) {
    const double s = g.alpha;
    if (std::abs(s) < kDegenerateTol)
        throw DegenerateQuadraticError(
            "convert_type: integrated variable appears only linearly; the "
            "transform is a delta kernel, not a quadratic form");
    QuadraticGeneratingFunction r;
    r.type = new_type;
    r.hbar = g.hbar;
    r.alpha = -1.0 / s;
    r.beta = -sigma * g.beta / s;
    r.gamma = g.gamma - g.beta * g.beta / s;
    r.u = -sigma * g.u / s;
    r.v = g.v - g.beta * g.u / s;
    r.c = g.c - complex(g.u * g.u / (2.0 * s), 0.0) +
          complex(0.0, 0.5 * g.hbar) * std::log(complex(0.0, -s));
    return r;
}

/* Single-step conversions between adjacent types. The coupling signs follow
 * the wave-function transform conventions: new-variable couplings +QP when
 * trading Q for P (and -PQ back), -qp when trading q for p (and +pq back). */
QuadraticGeneratingFunction convert_one(const QuadraticGeneratingFunction& g,
                                        GfType target) {
    switch (g.type) {
        case GfType::F1:
            if (target == GfType::F2) return integrate_second(g, +1.0, GfType::F2);
            if (target == GfType::F3) return integrate_first(g, -1.0, GfType::F3);
            break;
        case GfType::F2:
            if (target == GfType::F1) return integrate_second(g, -1.0, GfType::F1);
            if (target == GfType::F4) return integrate_first(g, -1.0, GfType::F4);
            break;
        case GfType::F3:
            if (target == GfType::F1) return integrate_first(g, +1.0, GfType::F1);
            if (target == GfType::F4) return integrate_second(g, +1.0, GfType::F4);
            break;
        case GfType::F4:
            if (target == GfType::F2) return integrate_first(g, +1.0, GfType::F2);
            if (target == GfType::F3) return integrate_second(g, -1.0, GfType::F3);
            break;
    }
    throw InvalidArgumentError("convert_type: no single-step path");
}

}  // namespace

QuadraticGeneratingFunction convert_type(const QuadraticGeneratingFunction& gf,
                                         GfType target) {
    if (gf.type == target) return gf;
    // Adjacency: F1-F2, F1-F3, F2-F4, F3-F4. Diagonal pairs take two steps.
    if ((gf.type == GfType::F1 && target == GfType::F4) ||
        (gf.type == GfType::F4 && target == GfType::F1))
        return convert_one(convert_one(gf, GfType::F2), target);
    if ((gf.type == GfType::F2 && target == GfType::F3) ||
        (gf.type == GfType::F3 && target == GfType::F2))
        return convert_one(convert_one(gf, GfType::F1), target);
    return convert_one(gf, target);
}

LinearCanonicalMap LinearCanonicalMap::inverse() const {
    const double dt = det();
    if (std::abs(dt) < 1e-14)
        throw InvalidArgumentError("canonical map: singular, cannot invert");
    LinearCanonicalMap r;
    r.a = d / dt;
    r.b = -b / dt;
    r.c = -this->c / dt;
    r.d = this->a / dt;
    // z' = M^{-1}(z - r0)
    r.e = -(r.a * e + r.b * f);
    r.f = -(r.c * e + r.d * f);
    return r;
}

LinearCanonicalMap LinearCanonicalMap::compose(const LinearCanonicalMap& o) const {
    LinearCanonicalMap r;
    r.a = a * o.a + b * o.c;
    r.b = a * o.b + b * o.d;
    r.c = c * o.a + d * o.c;
    r.d = c * o.b + d * o.d;
    r.e = a * o.e + b * o.f + e;
    r.f = c * o.e + d * o.f + f;
    return r;
}

LinearCanonicalMap extract_canonical_map(const QuadraticGeneratingFunction& g) {
    if (std::abs(g.beta) < kDegenerateTol)
        throw DegenerateQuadraticError(
            "extract_canonical_map: mixed coefficient vanishes, the form does "
            "not couple old and new variables");
    const double al = g.alpha, be = g.beta, ga = g.gamma, u = g.u, v = g.v;
    LinearCanonicalMap m;
    switch (g.type) {
        case GfType::F1:
            // p = dS/dq, P = -dS/dQ
            m.a = -al / be;
            m.b = 1.0 / be;
            m.e = -u / be;
            m.c = (al * ga - be * be) / be;
            m.d = -ga / be;
            m.f = ga * u / be - v;
            break;
        case GfType::F2:
            // p = dS/dq, Q = dS/dP
            m.a = (be * be - ga * al) / be;
            m.b = ga / be;
            m.e = v - ga * u / be;
            m.c = -al / be;
            m.d = 1.0 / be;
            m.f = -u / be;
            break;
        case GfType::F3:
            // q = -dS/dp, P = -dS/dQ
            m.a = -1.0 / be;
            m.b = -al / be;
            m.e = -u / be;
            m.c = ga / be;
            m.d = (ga * al - be * be) / be;
            m.f = ga * u / be - v;
            break;
        case GfType::F4:
            // q = -dS/dp, Q = dS/dP
            m.a = -ga / be;
            m.b = (be * be - ga * al) / be;
            m.e = v - ga * u / be;
            m.c = -1.0 / be;
            m.d = -al / be;
            m.f = -u / be;
            break;
    }
    return m;
}

double GaugeFunction::g(double q) const {
    double s = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) s = s * q + coeffs[k];
    return s;
}

double GaugeFunction::dg(double q) const {
    double s = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 1;)
        s = s * q + static_cast<double>(k) * coeffs[k];
    return s;
}

bool GaugeFunction::is_quadratic() const {
    for (std::size_t k = 3; k < coeffs.size(); ++k)
        if (coeffs[k] != 0.0) return false;
    return true;
}

QuadraticGeneratingFunction GaugeFunction::to_quadratic() const {
    if (!is_quadratic())
        throw DegenerateQuadraticError(
            "gauge function: g is not quadratic, no quadratic F2 exists");
    QuadraticGeneratingFunction r;
    r.type = GfType::F2;
    r.hbar = hbar;
    r.alpha = coeffs.size() > 2 ? 2.0 * coeffs[2] : 0.0;
    r.beta = 1.0;
    r.gamma = 0.0;
    r.u = coeffs.size() > 1 ? coeffs[1] : 0.0;
    r.v = 0.0;
    r.c = complex(coeffs.empty() ? 0.0 : coeffs[0], 0.0) +
          half_ihbar_log(hbar, 2.0 * M_PI * hbar, 0.0);
    return r;
}

GaugeFunction gauge_generating_function(std::vector<double> g_coeffs, double hbar) {
    if (!(hbar > 0.0))
        throw InvalidArgumentError("gauge function: hbar must be positive");
    return GaugeFunction{std::move(g_coeffs), hbar};
}

UnitarityReport verify_unitarity(const QuadraticGeneratingFunction& gf,
                                 const Grid1D& x_grid, const Grid1D& y_grid) {
    if (gf.type != GfType::F1 && gf.type != GfType::F2)
        throw UnsupportedPotentialError(
            "verify_unitarity: implemented for F1 and F2 forms");
    const std::size_t nx = x_grid.size(), ny = y_grid.size();
    std::vector<complex> k(nx * ny);
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j)
            k[i * ny + j] = gf.kernel(x_grid.x(i), y_grid.x(j));

    const double wy = y_grid.spacing();
    const double dx = x_grid.spacing();
    UnitarityReport rep;
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t ip = 0; ip <= i; ++ip) {
            complex acc = 0.0;
            const complex* ri = &k[i * ny];
            const complex* rp = &k[ip * ny];
            for (std::size_t j = 0; j < ny; ++j) acc += ri[j] * std::conj(rp[j]);
            const complex m = dx * wy * acc;
            if (i == ip) {
                const double dev = std::abs(m - complex(1.0, 0.0));
                if (dev > rep.max_diag_deviation) rep.max_diag_deviation = dev;
            } else {
                const double dev = std::abs(m);
                if (dev > rep.max_offdiag) rep.max_offdiag = dev;
            }
        }
    }
    return rep;
}

double reciprocity_hbar(double beta, double dx, double dy, std::size_t n) {
    return std::abs(beta) * dx * dy * static_cast<double>(n) / (2.0 * M_PI);
}

}  // namespace qhj
