#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace qhj {

/* One-dimensional Hamiltonians H = p^2/2 + V(q,t) with unit mass. The kind
 * determines whether closed-form generating functions exist (quadratic V). */

struct FreePotential {};

/* V = -a q, a constant force of strength a. */
struct ConstantForcePotential {
    double a = 0.0;
};

/* V = omega^2 q^2 / 2. */
struct HarmonicPotential {
    double omega = 1.0;
};

/* V = sum_k coeffs[k] q^k, time independent. */
struct PolynomialPotential {
    std::vector<double> coeffs;
};

/* User-supplied V(q,t) with first and second q-derivatives. The constructor of
 * Potential checks the supplied derivatives against finite differences at a
 * few probe points. */
struct CustomPotential {
    std::function<double(double, double)> v;
    std::function<double(double, double)> dv;
    std::function<double(double, double)> d2v;
};

class Potential {
public:
    using Spec = std::variant<FreePotential, ConstantForcePotential,
                              HarmonicPotential, PolynomialPotential,
                              CustomPotential>;

    Potential() : spec_(FreePotential{}) {}
    explicit Potential(Spec spec);

    static Potential free() { return Potential(FreePotential{}); }
    static Potential constant_force(double a) {
        return Potential(ConstantForcePotential{a});
    }
    static Potential harmonic(double omega = 1.0) {
        return Potential(HarmonicPotential{omega});
    }
    static Potential polynomial(std::vector<double> coeffs) {
        return Potential(PolynomialPotential{std::move(coeffs)});
    }

    double value(double q, double t) const;
    double dq(double q, double t) const;
    double d2q(double q, double t) const;

    /* True when V is at most quadratic in q for all t, i.e. the induced
     * canonical transformation is linear and closed forms may exist. */
    bool is_quadratic() const;

    bool is_time_dependent() const;

    const Spec& spec() const { return spec_; }
    std::string kind_name() const;

private:
    Spec spec_;
};

}  // namespace qhj
