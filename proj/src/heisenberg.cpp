#include "heisenberg.hpp"

#include <cmath>

#include "errors.hpp"

namespace qhj {

void HeisenbergSolution::map_means(double mean_q, double mean_p,
                                   double& out_q, double& out_p) const {
    out_q = qq * mean_q + qp * mean_p + q0;
    out_p = pq * mean_q + pp * mean_p + p0;
}

HeisenbergSolution heisenberg_from_generating(const QuadraticGeneratingFunction& gf,
                                              double t) {
    const LinearCanonicalMap inv = extract_canonical_map(gf).inverse();
    HeisenbergSolution sol;
    sol.t = t;
    sol.qq = inv.a;
    sol.qp = inv.b;
    sol.q0 = inv.e;
    sol.pq = inv.c;
    sol.pp = inv.d;
    sol.p0 = inv.f;
    return sol;
}

HeisenbergResidual verify_heisenberg_equations(
    const Potential& pot, const std::function<HeisenbergSolution(double)>& family,
    double t, double h) {
    if (!pot.is_quadratic())
        throw UnsupportedPotentialError(
            "verify_heisenberg_equations: affine operator flow requires a "
            "quadratic potential");
    if (!(h > 0.0) || !(t - 2.0 * h > 0.0))
        throw InvalidArgumentError(
            "verify_heisenberg_equations: need 0 < 2h < t for the time stencil");

    // V'(q) = v1 + v2 q with constant coefficients.
    const double v1 = pot.dq(0.0, t);
    const double v2 = pot.d2q(0.0, t);

    const HeisenbergSolution sm2 = family(t - 2.0 * h);
    const HeisenbergSolution sm1 = family(t - h);
    const HeisenbergSolution s0 = family(t);
    const HeisenbergSolution sp1 = family(t + h);
    const HeisenbergSolution sp2 = family(t + 2.0 * h);

    auto ddt = [&](double m2, double m1, double p1, double p2) {
        return (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h);
    };

    double r = 0.0;
    auto track = [&](double value) { r = std::max(r, std::abs(value)); };
    // d/dt q_H = p_H, componentwise in (q, p, 1).
    track(ddt(sm2.qq, sm1.qq, sp1.qq, sp2.qq) - s0.pq);
    track(ddt(sm2.qp, sm1.qp, sp1.qp, sp2.qp) - s0.pp);
    track(ddt(sm2.q0, sm1.q0, sp1.q0, sp2.q0) - s0.p0);
    // d/dt p_H = -V'(q_H) = -v1 - v2 q_H.
    track(ddt(sm2.pq, sm1.pq, sp1.pq, sp2.pq) + v2 * s0.qq);
    track(ddt(sm2.pp, sm1.pp, sp1.pp, sp2.pp) + v2 * s0.qp);
    track(ddt(sm2.p0, sm1.p0, sp1.p0, sp2.p0) + v2 * s0.q0 + v1);

    HeisenbergResidual out;
    out.max_eom_residual = r;
    out.commutator_defect = std::abs(s0.commutator_defect());
    return out;
}

double EhrenfestReport::max_error() const {
    return std::max(std::abs(predicted_q - oracle_q),
                    std::abs(predicted_p - oracle_p));
}

EhrenfestReport ehrenfest_crosscheck(const Potential& pot,
                                     const HeisenbergSolution& sol,
                                     const WaveFunction& psi0,
                                     const SplitStepOptions& opt) {
    EhrenfestReport rep;
    sol.map_means(psi0.expectation_q(), psi0.expectation_p(),
                  rep.predicted_q, rep.predicted_p);
    const WaveFunction evolved = split_step_evolve(pot, psi0, sol.t, opt);
    rep.oracle_q = evolved.expectation_q();
    rep.oracle_p = evolved.expectation_p();
    return rep;
}

}  // namespace qhj
