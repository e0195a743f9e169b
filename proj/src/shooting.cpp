#include "shooting.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "errors.hpp"

namespace qhj {

namespace {

std::size_t steps_for(double t, const ShootingOptions& opt) {
    if (opt.n_steps != 0) return opt.n_steps;
    return std::max<std::size_t>(256, static_cast<std::size_t>(std::ceil(t / 5e-4)));
}

ClassicalTrajectory shoot(const Potential& pot, double Q2, double p0, double t,
                          const ShootingOptions& opt) {
    return integrate_trajectory(pot, Q2, p0, t,
                                {.n_steps = steps_for(t, opt), .with_variational = true});
}

ShootingResult newton_solve(const Potential& pot, double Q2, double q1, double t,
                            double p0, const ShootingOptions& opt) {
    const double scale = std::max({1.0, std::abs(q1), std::abs(Q2)});
    const double tol = opt.tol * scale;

    ClassicalTrajectory tr = shoot(pot, Q2, p0, t, opt);
    double miss = tr.q_final() - q1;
    for (int it = 0; it < opt.max_iter; ++it) {
        if (std::abs(miss) <= tol)
            return {p0, std::move(tr), it};
        const double jac = tr.dq_dp0.back();
        if (std::abs(jac) < opt.jacobian_min)
            throw CausticError("shooting: endpoint insensitive to initial momentum "
                               "(|dq/dp0| < 1e-10), focal point at t=" +
                               std::to_string(t));
        const double full_step = -miss / jac;
        double lambda = 1.0;
        for (;;) {
            ClassicalTrajectory trial = shoot(pot, Q2, p0 + lambda * full_step, t, opt);
            const double trial_miss = trial.q_final() - q1;
            if (std::abs(trial_miss) <= (1.0 - 0.5 * lambda) * std::abs(miss) ||
                lambda < 1.0 / 64.0) {
                p0 += lambda * full_step;
                tr = std::move(trial);
                miss = trial_miss;
                break;
            }
            lambda *= 0.5;
        }
    }
    if (std::abs(miss) <= tol) return {p0, std::move(tr), opt.max_iter};
    throw NoConvergenceError("shooting: Newton stalled, endpoint miss " +
                             std::to_string(miss) + " at t=" + std::to_string(t));
}

}  // namespace

ShootingResult solve_two_point_guess(const Potential& pot, double Q2, double q1,
                                     double t, double p0_guess,
                                     const ShootingOptions& opt) {
    if (!(t >= opt.t_min))
        throw CausticError("shooting: t below the short-time guard (t_min=1e-3)");
    return newton_solve(pot, Q2, q1, t, p0_guess, opt);
}

ShootingResult solve_two_point(const Potential& pot, double Q2, double q1, double t,
                               const ShootingOptions& opt) {
    if (!(t >= opt.t_min))
        throw CausticError("shooting: t below the short-time guard (t_min=1e-3)");
    const double direct_guess = (q1 - Q2) / t;
    try {
        return newton_solve(pot, Q2, q1, t, direct_guess, opt);
    } catch (const NoConvergenceError&) {
        // Continuation in time: walk the solution from a quarter of the
        // interval up to t, warm-starting each stage.
        double p0 = 0.0;
        bool have_p0 = false;
        for (double f : {0.25, 0.5, 0.75, 1.0}) {
            const double tk = std::max(f * t, opt.t_min);
            const double guess = have_p0 ? p0 : (q1 - Q2) / tk;
            ShootingResult r = newton_solve(pot, Q2, q1, tk, guess, opt);
            p0 = r.p0;
            have_p0 = true;
            if (f == 1.0) return r;
        }
        throw;  // unreachable
    }
}

PrincipalFunctionSample principal_function_sample(const Potential& pot, double q1,
                                                  double Q2, double t,
                                                  const ShootingOptions& opt) {
    ShootingResult center = solve_two_point(pot, Q2, q1, t, opt);

    PrincipalFunctionSample s;
    s.q1 = q1;
    s.Q2 = Q2;
    s.t = t;
    s.S0 = center.trajectory.action_final();
    s.arrival_p = center.trajectory.p_final();
    s.departure_p = center.p0;

    const double hq = opt.fd_step * std::max(1.0, std::abs(q1));
    const double hQ = opt.fd_step * std::max(1.0, std::abs(Q2));

    // Neighboring solutions, warm-started from the center momentum.
    ShootingResult qp = solve_two_point_guess(pot, Q2, q1 + hq, t, center.p0, opt);
    ShootingResult qm = solve_two_point_guess(pot, Q2, q1 - hq, t, center.p0, opt);
    ShootingResult Qp = solve_two_point_guess(pot, Q2 + hQ, q1, t, center.p0, opt);
    ShootingResult Qm = solve_two_point_guess(pot, Q2 - hQ, q1, t, center.p0, opt);

    s.dS0_dq1 = (qp.trajectory.action_final() - qm.trajectory.action_final()) / (2.0 * hq);
    s.dS0_dQ2 = (Qp.trajectory.action_final() - Qm.trajectory.action_final()) / (2.0 * hQ);
    // dS0/dQ2 = -p0, so the mixed partial is the momentum sensitivity
    // -dp0/dq1, taken from the two q1-shifted solutions.
    s.d2S0_dq1dQ2 = -(qp.p0 - qm.p0) / (2.0 * hq);
    return s;
}

double hj_residual(const Potential& pot, double q1, double Q2, double t,
                   const ShootingOptions& opt) {
    PrincipalFunctionSample c = principal_function_sample(pot, q1, Q2, t, opt);
    const double ht = 1e-4 * std::max(1.0, std::abs(t));
    ShootingResult tp = solve_two_point(pot, Q2, q1, t + ht, opt);
    ShootingResult tm = solve_two_point(pot, Q2, q1, t - ht, opt);
    const double dS0_dt =
        (tp.trajectory.action_final() - tm.trajectory.action_final()) / (2.0 * ht);
    return std::abs(dS0_dt + 0.5 * c.dS0_dq1 * c.dS0_dq1 + pot.value(q1, t));
}

}  // namespace qhj
