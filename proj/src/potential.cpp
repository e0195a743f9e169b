#include "potential.hpp"

#include <cmath>

#include "errors.hpp"

namespace qhj {

namespace {

double poly_eval(const std::vector<double>& c, double q) {
    double s = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) s = s * q + c[k];
    return s;
}

double poly_eval_d1(const std::vector<double>& c, double q) {
    double s = 0.0;
    for (std::size_t k = c.size(); k-- > 1;)
        s = s * q + static_cast<double>(k) * c[k];
    return s;
}

double poly_eval_d2(const std::vector<double>& c, double q) {
    double s = 0.0;
    for (std::size_t k = c.size(); k-- > 2;)
        s = s * q + static_cast<double>(k) * static_cast<double>(k - 1) * c[k];
    return s;
}

/* Probe the supplied analytic derivatives of a custom potential against
 * central differences. Catches sign errors and mismatched closures early. */
void check_custom_derivatives(const CustomPotential& c) {
    if (!c.v || !c.dv || !c.d2v)
        throw InvalidArgumentError("potential: custom potential needs v, dv and d2v");
    const double probes[] = {-1.7, -0.3, 0.0, 0.9, 2.1};
    const double h = 1e-5;
    for (double q : probes) {
        for (double t : {0.0, 0.37}) {
            const double fd1 = (c.v(q + h, t) - c.v(q - h, t)) / (2.0 * h);
            const double fd2 =
                (c.v(q + h, t) - 2.0 * c.v(q, t) + c.v(q - h, t)) / (h * h);
            const double scale1 = 1.0 + std::abs(fd1);
            const double scale2 = 1.0 + std::abs(fd2);
            if (std::abs(c.dv(q, t) - fd1) > 1e-5 * scale1)
                throw InvalidArgumentError(
                    "potential: custom dv disagrees with finite differences");
            if (std::abs(c.d2v(q, t) - fd2) > 1e-4 * scale2)
                throw InvalidArgumentError(
                    "potential: custom d2v disagrees with finite differences");
        }
    }
}

}  // namespace

Potential::Potential(Spec spec) : spec_(std::move(spec)) {
    if (auto* h = std::get_if<HarmonicPotential>(&spec_)) {
        if (!(h->omega > 0.0))
            throw InvalidArgumentError("potential: harmonic omega must be positive");
    } else if (auto* c = std::get_if<CustomPotential>(&spec_)) {
        check_custom_derivatives(*c);
    }
}

double Potential::value(double q, double t) const {
    return std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FreePotential>) return 0.0;
            else if constexpr (std::is_same_v<T, ConstantForcePotential>)
                return -s.a * q;
            else if constexpr (std::is_same_v<T, HarmonicPotential>)
                return 0.5 * s.omega * s.omega * q * q;
            else if constexpr (std::is_same_v<T, PolynomialPotential>)
                return poly_eval(s.coeffs, q);
            else
                return s.v(q, t);
        },
        spec_);
}

double Potential::dq(double q, double t) const {
    return std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FreePotential>) return 0.0;
            else if constexpr (std::is_same_v<T, ConstantForcePotential>)
                return -s.a;
            else if constexpr (std::is_same_v<T, HarmonicPotential>)
                return s.omega * s.omega * q;
            else if constexpr (std::is_same_v<T, PolynomialPotential>)
                return poly_eval_d1(s.coeffs, q);
            else
                return s.dv(q, t);
        },
        spec_);
}

double Potential::d2q(double q, double t) const {
    return std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FreePotential>) return 0.0;
            else if constexpr (std::is_same_v<T, ConstantForcePotential>)
                return 0.0;
            else if constexpr (std::is_same_v<T, HarmonicPotential>)
                return s.omega * s.omega;
            else if constexpr (std::is_same_v<T, PolynomialPotential>)
                return poly_eval_d2(s.coeffs, q);
            else
                return s.d2v(q, t);
        },
        spec_);
}

bool Potential::is_quadratic() const {
    return std::visit(
        [](const auto& s) -> bool {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PolynomialPotential>) {
                for (std::size_t k = 3; k < s.coeffs.size(); ++k)
                    if (s.coeffs[k] != 0.0) return false;
                return true;
            } else if constexpr (std::is_same_v<T, CustomPotential>) {
                return false;
            } else {
                return true;
            }
        },
        spec_);
}

bool Potential::is_time_dependent() const {
    return std::holds_alternative<CustomPotential>(spec_);
}

std::string Potential::kind_name() const {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FreePotential>) return "free";
            else if constexpr (std::is_same_v<T, ConstantForcePotential>)
                return "constant_force";
            else if constexpr (std::is_same_v<T, HarmonicPotential>)
                return "harmonic";
            else if constexpr (std::is_same_v<T, PolynomialPotential>)
                return "polynomial";
            else
                return "custom";
        },
        spec_);
}

}  // namespace qhj
