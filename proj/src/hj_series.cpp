#include "hj_series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "errors.hpp"

namespace qhj {

namespace {

const complex kI(0.0, 1.0);

/* Joint state of a fan of characteristics sharing the departure point. */
struct Fan {
    std::vector<double> q, p, s0;
    std::vector<complex> s1;

    explicit Fan(std::size_t n) : q(n), p(n), s0(n), s1(n) {}
    std::size_t size() const { return q.size(); }
};

/* d2S0/dq2 along the bundle is dp/dq across neighboring members. */
double fan_curvature(const Fan& y, std::size_t m) {
    const std::size_t n = y.size();
    std::size_t lo = m == 0 ? 0 : m - 1;
    std::size_t hi = m + 1 < n ? m + 1 : m;
    const double dq = y.q[hi] - y.q[lo];
    if (dq == 0.0)
        throw CausticError("transport: fan members coincide, curvature undefined");
    return (y.p[hi] - y.p[lo]) / dq;
}

void fan_deriv(const Potential& pot, double t, const Fan& y, Fan& d) {
    const std::size_t n = y.size();
    for (std::size_t m = 0; m < n; ++m) {
        d.q[m] = y.p[m];
        d.p[m] = -pot.dq(y.q[m], t);
        d.s0[m] = 0.5 * y.p[m] * y.p[m] - pot.value(y.q[m], t);
    }
    for (std::size_t m = 0; m < n; ++m)
        d.s1[m] = 0.5 * kI * fan_curvature(y, m);
}

void fan_axpy(Fan& out, const Fan& y, const Fan& d, double h) {
    const std::size_t n = y.size();
    for (std::size_t m = 0; m < n; ++m) {
        out.q[m] = y.q[m] + h * d.q[m];
        out.p[m] = y.p[m] + h * d.p[m];
        out.s0[m] = y.s0[m] + h * d.s0[m];
        out.s1[m] = y.s1[m] + h * d.s1[m];
    }
}

void fan_rk4_step(const Potential& pot, Fan& y, double t, double h, Fan& k1,
                  Fan& k2, Fan& k3, Fan& k4, Fan& tmp) {
    fan_deriv(pot, t, y, k1);
    fan_axpy(tmp, y, k1, 0.5 * h);
    fan_deriv(pot, t + 0.5 * h, tmp, k2);
    fan_axpy(tmp, y, k2, 0.5 * h);
    fan_deriv(pot, t + 0.5 * h, tmp, k3);
    fan_axpy(tmp, y, k3, h);
    fan_deriv(pot, t + h, tmp, k4);
    const std::size_t n = y.size();
    for (std::size_t m = 0; m < n; ++m) {
        y.q[m] += h / 6.0 * (k1.q[m] + 2.0 * k2.q[m] + 2.0 * k3.q[m] + k4.q[m]);
        y.p[m] += h / 6.0 * (k1.p[m] + 2.0 * k2.p[m] + 2.0 * k3.p[m] + k4.p[m]);
        y.s0[m] += h / 6.0 * (k1.s0[m] + 2.0 * k2.s0[m] + 2.0 * k3.s0[m] + k4.s0[m]);
        y.s1[m] += h / 6.0 * (k1.s1[m] + 2.0 * k2.s1[m] + 2.0 * k3.s1[m] + k4.s1[m]);
    }
}

void require_single_valued(const Fan& y) {
    for (std::size_t m = 1; m < y.size(); ++m)
        if (!(y.q[m] > y.q[m - 1]))
            throw CausticError(
                "transport: characteristics crossed, the bundle is no longer "
                "single-valued over position");
}

/* Four-point Lagrange interpolation on the (generally nonuniform) fan nodes. */
template <typename T>
T lagrange4(const std::vector<double>& xs, const std::vector<T>& ys, double x) {
    const std::size_t n = xs.size();
    std::size_t idx =
        static_cast<std::size_t>(std::upper_bound(xs.begin(), xs.end(), x) -
                                 xs.begin());
    std::size_t j0 = idx >= 2 ? idx - 2 : 0;
    if (j0 + 4 > n) j0 = n - 4;
    T acc{};
    for (std::size_t a = 0; a < 4; ++a) {
        double w = 1.0;
        for (std::size_t b = 0; b < 4; ++b) {
            if (a == b) continue;
            w *= (x - xs[j0 + b]) / (xs[j0 + a] - xs[j0 + b]);
        }
        acc += w * ys[j0 + a];
    }
    return acc;
}

}  // namespace

Order1Solution solve_order1_transport(const Potential& pot, double Q2,
                                      std::vector<double> q1_targets, double t,
                                      const TransportOptions& opt) {
    if (q1_targets.empty())
        throw InvalidArgumentError("transport: no target positions");
    if (!(t > 10.0 * opt.t_ref))
        throw InvalidArgumentError("transport: t must exceed 10 * t_ref");

    const auto [qmin_it, qmax_it] =
        std::minmax_element(q1_targets.begin(), q1_targets.end());
    const double qmin = *qmin_it, qmax = *qmax_it;

    // Momentum range from shooting at the extremes of the requested window.
    double p_lo = solve_two_point(pot, Q2, qmin, t, opt.shooting).p0;
    double p_hi = solve_two_point(pot, Q2, qmax, t, opt.shooting).p0;
    if (p_lo > p_hi)
        throw CausticError("transport: endpoint map is orientation-reversing "
                           "(past the first focal point)");
    double width = p_hi - p_lo;
    if (width < 1e-6) width = std::max(0.5, 0.05 * std::abs(p_lo));
    const double ext = 0.08 * width;

    const std::size_t n_fan =
        opt.fan_size != 0
            ? std::max<std::size_t>(opt.fan_size, 8)
            : std::clamp<std::size_t>(q1_targets.size() + 41, 161, 641);
    const double pa = p_lo - ext, pb = p_hi + ext;

    // Phase A: plain per-member integration over [0, t_ref]; the amplitude is
    // seeded at t_ref from the short-time asymptotics, so the 1/t curvature
    // singularity is never touched numerically.
    Fan fan(n_fan);
    std::vector<double> fan_p0(n_fan);
    const double t_ref = opt.t_ref;
    {
        const std::size_t n_a = 8;
        const double h = t_ref / static_cast<double>(n_a);
        for (std::size_t m = 0; m < n_fan; ++m) {
            fan_p0[m] = pa + (pb - pa) * static_cast<double>(m) /
                                 static_cast<double>(n_fan - 1);
            double q = Q2, p = fan_p0[m], s = 0.0;
            for (std::size_t k = 0; k < n_a; ++k) {
                const double tk = h * static_cast<double>(k);
                auto f = [&](double qq, double pp, double tt, double* dq,
                             double* dp, double* ds) {
                    *dq = pp;
                    *dp = -pot.dq(qq, tt);
                    *ds = 0.5 * pp * pp - pot.value(qq, tt);
                };
                double k1q, k1p, k1s, k2q, k2p, k2s, k3q, k3p, k3s, k4q, k4p, k4s;
                f(q, p, tk, &k1q, &k1p, &k1s);
                f(q + 0.5 * h * k1q, p + 0.5 * h * k1p, tk + 0.5 * h, &k2q, &k2p, &k2s);
                f(q + 0.5 * h * k2q, p + 0.5 * h * k2p, tk + 0.5 * h, &k3q, &k3p, &k3s);
                f(q + h * k3q, p + h * k3p, tk + h, &k4q, &k4p, &k4s);
                q += h / 6.0 * (k1q + 2.0 * k2q + 2.0 * k3q + k4q);
                p += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
                s += h / 6.0 * (k1s + 2.0 * k2s + 2.0 * k3s + k4s);
            }
            fan.q[m] = q;
            fan.p[m] = p;
            fan.s0[m] = s;
            fan.s1[m] = 0.5 * kI *
                        (std::log(t_ref) -
                         pot.d2q(Q2, 0.0) * t_ref * t_ref / 6.0);
        }
    }
    require_single_valued(fan);

    // Phase B: geometric time steps from t_ref to t on the coupled fan.
    const std::size_t n_b =
        opt.n_time_steps != 0
            ? opt.n_time_steps
            : std::max<std::size_t>(
                  240, static_cast<std::size_t>(std::ceil(64.0 * std::log(t / t_ref))));
    Fan k1(n_fan), k2(n_fan), k3(n_fan), k4(n_fan), tmp(n_fan);
    const double r = std::pow(t / t_ref, 1.0 / static_cast<double>(n_b));
    double tk = t_ref;
    for (std::size_t k = 0; k < n_b; ++k) {
        const double t_next = k + 1 == n_b ? t : t_ref * std::pow(r, double(k + 1));
        fan_rk4_step(pot, fan, tk, t_next - tk, k1, k2, k3, k4, tmp);
        require_single_valued(fan);
        tk = t_next;
    }

    if (qmin < fan.q.front() || qmax > fan.q.back())
        throw NoConvergenceError("transport: fan does not cover the targets");

    Order1Solution out;
    out.q1 = std::move(q1_targets);
    out.S0.reserve(out.q1.size());
    out.S1.reserve(out.q1.size());
    out.departure_p.reserve(out.q1.size());
    out.arrival_p.reserve(out.q1.size());
    for (double q : out.q1) {
        out.S0.push_back(lagrange4(fan.q, fan.s0, q));
        out.S1.push_back(lagrange4(fan.q, fan.s1, q));
        out.departure_p.push_back(lagrange4(fan.q, fan_p0, q));
        out.arrival_p.push_back(lagrange4(fan.q, fan.p, q));
    }
    return out;
}

complex order1_stability_log(const Potential& pot, double Q2, double q1, double t,
                             const ShootingOptions& opt) {
    auto r = solve_two_point(pot, Q2, q1, t, opt);
    const double delta = r.trajectory.dq_dp0.back();
    if (!(delta > 0.0))
        throw CausticError("stability log: dq/dp0 is not positive, past a focal point");
    return complex(0.0, 0.5 * std::log(delta));
}

SeriesField SeriesField::with_hbar(double new_hbar) const {
    if (!(new_hbar > 0.0))
        throw InvalidArgumentError("series field: hbar must be positive");
    SeriesField f = *this;
    f.hbar = new_hbar;
    f.constant = 0.5 * new_hbar * kI *
                 complex(std::log(2.0 * M_PI * new_hbar), 0.5 * M_PI);
    return f;
}

SeriesField solve_series_field(const Potential& pot, const Grid1D& q_grid,
                               const Grid1D& Q_grid, double t, double hbar,
                               const TransportOptions& opt) {
    SeriesField f;
    f.q_grid = q_grid;
    f.Q_grid = Q_grid;
    f.t = t;
    f.hbar = hbar;
    f.constant =
        0.5 * hbar * kI * complex(std::log(2.0 * M_PI * hbar), 0.5 * M_PI);
    const std::size_t nq = q_grid.size(), nQ = Q_grid.size();
    f.S0.resize(nq * nQ);
    f.S1.resize(nq * nQ);
    const std::vector<double> targets = q_grid.points();
    for (std::size_t j = 0; j < nQ; ++j) {
        Order1Solution col = solve_order1_transport(pot, Q_grid.x(j), targets, t, opt);
        for (std::size_t i = 0; i < nq; ++i) {
            f.S0[i * nQ + j] = col.S0[i];
            f.S1[i * nQ + j] = col.S1[i];
        }
    }
    return f;
}

double series_residual(const Potential& pot, double q1, double Q2, double t,
                       double hbar, const TransportOptions& opt) {
    const double hq = 0.02 * std::max(1.0, std::abs(q1));
    const double ht = 5e-3 * std::max(1.0, t);
    std::vector<double> qs(5);
    for (int i = 0; i < 5; ++i) qs[i] = q1 + (i - 2) * hq;

    // S(q_i, t_j) for the five-point cross; each time is one transport solve.
    complex s[5][5];
    const complex constant =
        0.5 * hbar * kI * complex(std::log(2.0 * M_PI * hbar), 0.5 * M_PI);
    for (int j = 0; j < 5; ++j) {
        const double tj = t + (j - 2) * ht;
        Order1Solution sol = solve_order1_transport(pot, Q2, qs, tj, opt);
        for (int i = 0; i < 5; ++i)
            s[i][j] = complex(sol.S0[i], 0.0) + hbar * sol.S1[i] + constant;
    }

    const complex dq1 =
        (-s[4][2] + 8.0 * s[3][2] - 8.0 * s[1][2] + s[0][2]) / (12.0 * hq);
    const complex dq2 = (-s[4][2] + 16.0 * s[3][2] - 30.0 * s[2][2] +
                         16.0 * s[1][2] - s[0][2]) /
                        (12.0 * hq * hq);
    const complex dt =
        (-s[2][4] + 8.0 * s[2][3] - 8.0 * s[2][1] + s[2][0]) / (12.0 * ht);

    const complex res =
        dt + 0.5 * dq1 * dq1 - 0.5 * kI * hbar * dq2 + pot.value(q1, t);
    return std::abs(res);
}

double quadratic_family_residual(
    const std::function<QuadraticGeneratingFunction(double)>& family,
    const Potential& pot, double x, double y, double t) {
    const double ht = 1e-3 * std::max(1.0, t);
    complex sv[5];
    for (int j = 0; j < 5; ++j) sv[j] = family(t + (j - 2) * ht).value(x, y);
    const complex dt = (-sv[4] + 8.0 * sv[3] - 8.0 * sv[1] + sv[0]) / (12.0 * ht);
    const QuadraticGeneratingFunction g = family(t);
    const complex dq1(g.dx(x, y), 0.0);
    const complex dq2(g.alpha, 0.0);
    const complex res =
        dt + 0.5 * dq1 * dq1 - 0.5 * kI * g.hbar * dq2 + pot.value(x, t);
    return std::abs(res);
}

QuadraticGeneratingFunction exchange_generating_function(double t, double hbar) {
    if (!(hbar > 0.0))
        throw InvalidArgumentError("exchange form: hbar must be positive");
    // Negative t runs the flow backward from the swap; the form stays regular
    // until the first focal time on either side.
    const double co = std::cos(t);
    if (std::abs(co) < 1e-8)
        throw CausticError("exchange form: focuses at t = (n + 1/2) pi");
    const double m = std::floor(t / M_PI + 0.5);
    QuadraticGeneratingFunction g;
    g.type = GfType::F1;
    g.hbar = hbar;
    g.alpha = -std::tan(t);
    g.beta = 1.0 / co;
    g.gamma = -std::tan(t);
    g.c = 0.5 * hbar * kI *
          complex(std::log(2.0 * M_PI * hbar * std::abs(co)), M_PI * m);
    return g;
}

InitialConditionReport verify_initial_condition(
    const std::function<complex(double q1, double Q2, double t)>& kernel,
    double hbar, double probe_q, const std::vector<double>& times) {
    if (times.empty())
        throw InvalidArgumentError("initial condition: no times given");
    const double t_min = *std::min_element(times.begin(), times.end());
    if (!(t_min > 0.0))
        throw InvalidArgumentError("initial condition: times must be positive");

    // Quadrature window and resolution sized from the fastest kernel phase
    // ~ (q-Q)^2 / (2 hbar t) over the window.
    const double w = 8.0;
    const double max_grad = 2.0 * w / (hbar * t_min);
    std::size_t n = static_cast<std::size_t>(
        std::clamp(2.0 * w * max_grad / M_PI * 2.0, 1024.0, 131072.0));
    Grid1D grid(probe_q - w, probe_q + w, n);

    struct TestFn {
        double center, width;
        double operator()(double x) const {
            const double d = (x - center) / width;
            return std::exp(-d * d);
        }
    };
    const TestFn fns[] = {{probe_q - 0.3, 0.8}, {probe_q + 0.4, 1.2}};

    InitialConditionReport rep;
    rep.times = times;
    for (double t : times) {
        double worst = 0.0;
        for (const auto& fn : fns) {
            complex acc = 0.0;
            const auto wts = grid.trapezoid_weights();
            for (std::size_t j = 0; j < grid.size(); ++j) {
                const double Q = grid.x(j);
                acc += wts[j] * kernel(probe_q, Q, t) * fn(Q);
            }
            worst = std::max(worst, std::abs(acc - complex(fn(probe_q), 0.0)));
        }
        rep.errors.push_back(worst);
    }
    rep.monotone = true;
    for (std::size_t i = 1; i < rep.errors.size(); ++i)
        if (rep.errors[i] >= rep.errors[i - 1]) rep.monotone = false;
    rep.final_error = rep.errors.back();
    return rep;
}

}  // namespace qhj
