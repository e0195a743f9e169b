#include "trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "errors.hpp"

namespace qhj {

double ClassicalTrajectory::energy_drift(const Potential& pot) const {
    if (q.empty()) return 0.0;
    const double e0 = 0.5 * p[0] * p[0] + pot.value(q[0], times[0]);
    double drift = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        const double e = 0.5 * p[i] * p[i] + pot.value(q[i], times[i]);
        drift = std::max(drift, std::abs(e - e0));
    }
    return drift;
}

namespace {

struct State {
    double q, p, s, dq, dp;
};

State deriv(const Potential& pot, const State& y, double t, bool var) {
    State d;
    d.q = y.p;
    d.p = -pot.dq(y.q, t);
    d.s = 0.5 * y.p * y.p - pot.value(y.q, t);
    if (var) {
        const double v2 = pot.d2q(y.q, t);
        d.dq = y.dp;
        d.dp = -v2 * y.dq;
    } else {
        d.dq = d.dp = 0.0;
    }
    return d;
}

State axpy(const State& y, const State& d, double h) {
    return {y.q + h * d.q, y.p + h * d.p, y.s + h * d.s,
            y.dq + h * d.dq, y.dp + h * d.dp};
}

State rk4_step(const Potential& pot, const State& y, double t, double h, bool var) {
    const State k1 = deriv(pot, y, t, var);
    const State k2 = deriv(pot, axpy(y, k1, 0.5 * h), t + 0.5 * h, var);
    const State k3 = deriv(pot, axpy(y, k2, 0.5 * h), t + 0.5 * h, var);
    const State k4 = deriv(pot, axpy(y, k3, h), t + h, var);
    State out = y;
    out.q += h / 6.0 * (k1.q + 2.0 * k2.q + 2.0 * k3.q + k4.q);
    out.p += h / 6.0 * (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p);
    out.s += h / 6.0 * (k1.s + 2.0 * k2.s + 2.0 * k3.s + k4.s);
    if (var) {
        out.dq += h / 6.0 * (k1.dq + 2.0 * k2.dq + 2.0 * k3.dq + k4.dq);
        out.dp += h / 6.0 * (k1.dp + 2.0 * k2.dp + 2.0 * k3.dp + k4.dp);
    }
    return out;
}

}  // namespace

ClassicalTrajectory integrate_trajectory(const Potential& pot, double q0, double p0,
                                         double t_final,
                                         const IntegrateOptions& opt) {
    if (!(t_final > 0.0))
        throw InvalidArgumentError("trajectory: t_final must be positive");
    std::size_t n = opt.n_steps;
    if (n == 0)
        n = std::max<std::size_t>(256, static_cast<std::size_t>(std::ceil(t_final / 0.002)));
    const double h = t_final / static_cast<double>(n);

    ClassicalTrajectory tr;
    tr.times.reserve(n + 1);
    tr.q.reserve(n + 1);
    tr.p.reserve(n + 1);
    tr.action.reserve(n + 1);
    if (opt.with_variational) {
        tr.dq_dp0.reserve(n + 1);
        tr.dp_dp0.reserve(n + 1);
    }

    State y{q0, p0, 0.0, 0.0, 1.0};
    auto push = [&](double t, const State& s) {
        tr.times.push_back(t);
        tr.q.push_back(s.q);
        tr.p.push_back(s.p);
        tr.action.push_back(s.s);
        if (opt.with_variational) {
            tr.dq_dp0.push_back(s.dq);
            tr.dp_dp0.push_back(s.dp);
        }
    };
    push(0.0, y);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = h * static_cast<double>(i);
        y = rk4_step(pot, y, t, h, opt.with_variational);
        if (!std::isfinite(y.q) || !std::isfinite(y.p) || !std::isfinite(y.s))
            throw IntegrationError("trajectory: state became non-finite at t=" +
                                   std::to_string(t + h));
        push(h * static_cast<double>(i + 1), y);
    }
    return tr;
}

}  // namespace qhj
