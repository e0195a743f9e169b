#include "phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "errors.hpp"

namespace qhj {

namespace {

constexpr double kPi = 3.14159265358979323846;

/* Four-point polynomial interpolation on a uniform grid, zero outside the
 * window. The stencil is clamped near the edges. */
double interp4(const Grid1D& g, const double* f, std::ptrdiff_t stride, double x) {
    if (x < g.x_min() || x > g.x_max()) return 0.0;
    const double u = (x - g.x_min()) / g.spacing();
    std::ptrdiff_t base = static_cast<std::ptrdiff_t>(std::floor(u)) - 1;
    const std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(g.size()) - 4;
    base = std::max<std::ptrdiff_t>(0, std::min(base, hi));
    const double s = u - static_cast<double>(base);
    const double w0 = -(s - 1.0) * (s - 2.0) * (s - 3.0) / 6.0;
    const double w1 = s * (s - 2.0) * (s - 3.0) / 2.0;
    const double w2 = -s * (s - 1.0) * (s - 3.0) / 2.0;
    const double w3 = s * (s - 1.0) * (s - 2.0) / 6.0;
    const double* p = f + base * stride;
    return w0 * p[0] + w1 * p[stride] + w2 * p[2 * stride] + w3 * p[3 * stride];
}

/* Same for the q direction of a field, interpolating in both variables. */
double interp4_2d(const PhaseSpaceField& f, double q, double p) {
    const Grid1D& gq = f.q_grid;
    if (q < gq.x_min() || q > gq.x_max()) return 0.0;
    if (p < f.p_grid.x_min() || p > f.p_grid.x_max()) return 0.0;
    const double u = (q - gq.x_min()) / gq.spacing();
    std::ptrdiff_t base = static_cast<std::ptrdiff_t>(std::floor(u)) - 1;
    const std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(gq.size()) - 4;
    base = std::max<std::ptrdiff_t>(0, std::min(base, hi));
    const double s = u - static_cast<double>(base);
    const double w0 = -(s - 1.0) * (s - 2.0) * (s - 3.0) / 6.0;
    const double w1 = s * (s - 2.0) * (s - 3.0) / 2.0;
    const double w2 = -s * (s - 1.0) * (s - 3.0) / 2.0;
    const double w3 = s * (s - 1.0) * (s - 2.0) / 6.0;
    const std::size_t np = f.p_grid.size();
    const double* rows = f.values.data() + static_cast<std::size_t>(base) * np;
    const double r0 = interp4(f.p_grid, rows, 1, p);
    const double r1 = interp4(f.p_grid, rows + np, 1, p);
    const double r2 = interp4(f.p_grid, rows + 2 * np, 1, p);
    const double r3 = interp4(f.p_grid, rows + 3 * np, 1, p);
    return w0 * r0 + w1 * r1 + w2 * r2 + w3 * r3;
}

void require_same_frame(const PhaseSpaceField& a, const PhaseSpaceField& b) {
    if (!(a.q_grid == b.q_grid) || !(a.p_grid == b.p_grid) || a.hbar != b.hbar)
        throw GridMismatchError("phase-space fields live on different grids");
}

/* Cosine-squared roll-off over the outer taper_fraction of [0, Y]. */
double taper_value(double y_abs, double y_half_width, double taper_fraction) {
    const double flat = (1.0 - taper_fraction) * y_half_width;
    if (y_abs <= flat) return 1.0;
    if (y_abs >= y_half_width) return 0.0;
    const double s = (y_abs - flat) / (taper_fraction * y_half_width);
    const double c = std::cos(0.5 * kPi * s);
    return c * c;
}

/* Offset sampling for the gauge kernels: spacing fine enough that the fastest
 * phase, from the gauge gradient over the reachable positions plus the
 * outgoing momentum factor, advances well under one radian per sample. */
std::size_t auto_offset_samples(const GaugeFunction& g, double q_extent,
                                double p_extent, double y_half_width,
                                std::size_t requested) {
    if (requested != 0) {
        if (requested < 16)
            throw InvalidArgumentError("gauge kernel: n_y must be at least 16");
        return requested;
    }
    const double z_max = q_extent + y_half_width;
    double grad = 0.0;
    for (int k = 0; k <= 200; ++k) {
        const double z = -z_max + 2.0 * z_max * static_cast<double>(k) / 200.0;
        grad = std::max(grad, std::abs(g.dg(z)));
    }
    const double rate = (2.0 * grad + 2.0 * p_extent) / g.hbar;
    const double n = 2.0 * y_half_width * rate * 2.5 / (2.0 * kPi);
    return std::max<std::size_t>(256, static_cast<std::size_t>(std::ceil(n)));
}

}  // namespace

double PhaseSpaceField::integral() const {
    const std::vector<double> wq = q_grid.trapezoid_weights();
    const std::vector<double> wp = p_grid.trapezoid_weights();
    double acc = 0.0;
    for (std::size_t i = 0; i < q_grid.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < p_grid.size(); ++j) row += wp[j] * at(i, j);
        acc += wq[i] * row;
    }
    return acc;
}

double PhaseSpaceField::max_abs() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

std::vector<double> PhaseSpaceField::position_marginal() const {
    const std::vector<double> wp = p_grid.trapezoid_weights();
    std::vector<double> out(q_grid.size(), 0.0);
    for (std::size_t i = 0; i < q_grid.size(); ++i)
        for (std::size_t j = 0; j < p_grid.size(); ++j) out[i] += wp[j] * at(i, j);
    return out;
}

std::vector<double> PhaseSpaceField::momentum_marginal() const {
    const std::vector<double> wq = q_grid.trapezoid_weights();
    std::vector<double> out(p_grid.size(), 0.0);
    for (std::size_t i = 0; i < q_grid.size(); ++i)
        for (std::size_t j = 0; j < p_grid.size(); ++j) out[j] += wq[i] * at(i, j);
    return out;
}

PhaseSpaceField wigner_transform(const WaveFunction& psi, const Grid1D& p_grid) {
    const Grid1D& q_grid = psi.grid();
    const double hbar = psi.hbar();
    const double dq = q_grid.spacing();
    const std::size_t n = q_grid.size();
    const std::size_t np = p_grid.size();

    const double p_band = 0.5 * kPi * hbar / dq;
    const double p_reach = std::max(std::abs(p_grid.x_min()), std::abs(p_grid.x_max()));
    if (p_reach > p_band * (1.0 + 1e-12))
        throw AliasingError(
            "wigner_transform: momentum window exceeds the offset-sampling band "
            "pi hbar / (2 dq) = " + std::to_string(p_band) + "; refine the position grid");

    PhaseSpaceField w;
    w.q_grid = q_grid;
    w.p_grid = p_grid;
    w.hbar = hbar;
    w.values.assign(n * np, 0.0);

    const std::vector<complex>& v = psi.values();
    const double scale = dq / (kPi * hbar);

    std::vector<complex> prod;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t m = std::min(i, n - 1 - i);
        prod.resize(m + 1);
        for (std::size_t k = 0; k <= m; ++k)
            prod[k] = std::conj(v[i + k]) * v[i - k];
        for (std::size_t j = 0; j < np; ++j) {
            const double theta = 2.0 * p_grid.x(j) * dq / hbar;
            const complex rot(std::cos(theta), std::sin(theta));
            complex phase = rot;
            double acc = std::real(prod[0]);
            for (std::size_t k = 1; k <= m; ++k) {
                acc += 2.0 * std::real(prod[k] * phase);
                phase *= rot;
            }
            w.values[i * np + j] = scale * acc;
        }
    }
    return w;
}

PhaseSpaceField husimi_from_wigner(const PhaseSpaceField& w, double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw InvalidArgumentError(
            "husimi_from_wigner: squeeze alpha must be positive; the smoothing "
            "window degenerates as alpha -> 0");
    const double sq = std::sqrt(0.5 * w.hbar / alpha);  // position std dev
    const double sp = std::sqrt(0.5 * w.hbar * alpha);  // momentum std dev
    const std::size_t nq = w.q_grid.size();
    const std::size_t np = w.p_grid.size();

    // Discrete-normalized separable Gaussian window, truncated at six sigma.
    auto window = [](double sigma, double dx) {
        const std::ptrdiff_t half =
            static_cast<std::ptrdiff_t>(std::ceil(6.0 * sigma / dx));
        std::vector<double> win(2 * half + 1);
        double sum = 0.0;
        for (std::ptrdiff_t k = -half; k <= half; ++k) {
            const double z = static_cast<double>(k) * dx / sigma;
            sum += win[k + half] = std::exp(-0.5 * z * z);
        }
        for (double& x : win) x /= sum;
        return win;
    };
    const std::vector<double> win_q = window(sq, w.q_grid.spacing());
    const std::vector<double> win_p = window(sp, w.p_grid.spacing());
    const std::ptrdiff_t hq = (static_cast<std::ptrdiff_t>(win_q.size()) - 1) / 2;
    const std::ptrdiff_t hp = (static_cast<std::ptrdiff_t>(win_p.size()) - 1) / 2;

    // Smooth along momentum rows, then along position columns.
    std::vector<double> tmp(nq * np, 0.0);
    for (std::size_t i = 0; i < nq; ++i) {
        for (std::size_t j = 0; j < np; ++j) {
            double acc = 0.0;
            for (std::ptrdiff_t k = -hp; k <= hp; ++k) {
                const std::ptrdiff_t jj = static_cast<std::ptrdiff_t>(j) + k;
                if (jj < 0 || jj >= static_cast<std::ptrdiff_t>(np)) continue;
                acc += win_p[k + hp] * w.values[i * np + jj];
            }
            tmp[i * np + j] = acc;
        }
    }
    PhaseSpaceField h;
    h.q_grid = w.q_grid;
    h.p_grid = w.p_grid;
    h.hbar = w.hbar;
    h.values.assign(nq * np, 0.0);
    for (std::size_t j = 0; j < np; ++j) {
        for (std::size_t i = 0; i < nq; ++i) {
            double acc = 0.0;
            for (std::ptrdiff_t k = -hq; k <= hq; ++k) {
                const std::ptrdiff_t ii = static_cast<std::ptrdiff_t>(i) + k;
                if (ii < 0 || ii >= static_cast<std::ptrdiff_t>(nq)) continue;
                acc += win_q[k + hq] * tmp[ii * np + j];
            }
            h.values[i * np + j] = acc;
        }
    }
    return h;
}

PhaseSpaceField transport_field(const PhaseSpaceField& f, const LinearCanonicalMap& map,
                                double leak_tolerance) {
    PhaseSpaceField out;
    out.q_grid = f.q_grid;
    out.p_grid = f.p_grid;
    out.hbar = f.hbar;
    const std::size_t nq = f.q_grid.size();
    const std::size_t np = f.p_grid.size();
    out.values.assign(nq * np, 0.0);
    for (std::size_t i = 0; i < nq; ++i) {
        const double q = f.q_grid.x(i);
        for (std::size_t j = 0; j < np; ++j) {
            double Q, P;
            map.apply(q, f.p_grid.x(j), &Q, &P);
            out.values[i * np + j] = interp4_2d(f, Q, P);
        }
    }
    const double before = f.integral();
    const double after = out.integral();
    const double scale = std::max(1.0, std::abs(before));
    if (std::abs(after - before) > leak_tolerance * scale)
        throw MassLeakageError(
            "transport_field: window integral changed from " + std::to_string(before) +
            " to " + std::to_string(after) + "; the image leaves the grid window");
    return out;
}

PhaseSpaceField gauge_quantum_action(const PhaseSpaceField& f, const GaugeFunction& g,
                                     const GaugeKernelOptions& opt) {
    if (f.hbar != g.hbar)
        throw GridMismatchError("gauge_quantum_action: field and gauge hbar differ");
    if (!(opt.y_half_width > 0.0) || !(opt.taper_fraction > 0.0) ||
        !(opt.taper_fraction < 1.0))
        throw InvalidArgumentError("gauge_quantum_action: bad kernel window options");

    const std::size_t nq = f.q_grid.size();
    const std::size_t np = f.p_grid.size();
    const double hbar = f.hbar;
    const double q_extent =
        std::max(std::abs(f.q_grid.x_min()), std::abs(f.q_grid.x_max()));
    const double p_extent =
        std::max(std::abs(f.p_grid.x_min()), std::abs(f.p_grid.x_max()));
    const std::size_t n_y =
        auto_offset_samples(g, q_extent, p_extent, opt.y_half_width, opt.n_y);
    const std::size_t half = n_y / 2;
    const double dy = opt.y_half_width / static_cast<double>(half);

    // The offset spacing also limits how far the momentum window may reach.
    const double p_band = 0.5 * kPi * hbar / dy;
    if (p_extent > p_band)
        throw AliasingError(
            "gauge_quantum_action: momentum window exceeds the offset band; "
            "increase n_y");

    const std::vector<double> wp = f.p_grid.trapezoid_weights();
    PhaseSpaceField out;
    out.q_grid = f.q_grid;
    out.p_grid = f.p_grid;
    out.hbar = f.hbar;
    out.values.assign(nq * np, 0.0);

    std::vector<complex> transform(half + 1);
    for (std::size_t i = 0; i < nq; ++i) {
        const double q = f.q_grid.x(i);
        // Momentum transform of the row at the positive offsets, F(y_k).
        for (std::size_t k = 0; k <= half; ++k) {
            const double y = static_cast<double>(k) * dy;
            const double theta = -2.0 * y * f.p_grid.spacing() / hbar;
            const complex rot(std::cos(theta), std::sin(theta));
            const double theta0 = -2.0 * y * f.p_grid.x_min() / hbar;
            complex phase(std::cos(theta0), std::sin(theta0));
            complex acc(0.0, 0.0);
            for (std::size_t j = 0; j < np; ++j) {
                acc += wp[j] * f.values[i * np + j] * phase;
                phase *= rot;
            }
            transform[k] = acc;
        }
        // Gauge phase and truncation taper at each offset.
        for (std::size_t k = 0; k <= half; ++k) {
            const double y = static_cast<double>(k) * dy;
            const double phi = (g.g(q - y) - g.g(q + y)) / hbar;
            transform[k] *= taper_value(y, opt.y_half_width, opt.taper_fraction) *
                            complex(std::cos(phi), std::sin(phi));
        }
        // Back to momentum; the k = 0 term is real and the rest pair up.
        const double scale = dy / (kPi * hbar);
        for (std::size_t j = 0; j < np; ++j) {
            const double theta = 2.0 * f.p_grid.x(j) * dy / hbar;
            const complex rot(std::cos(theta), std::sin(theta));
            complex phase = rot;
            double acc = std::real(transform[0]);
            for (std::size_t k = 1; k <= half; ++k) {
                acc += 2.0 * std::real(transform[k] * phase);
                phase *= rot;
            }
            out.values[i * np + j] = scale * acc;
        }
    }
    return out;
}

PhaseSpaceField gauge_classical_action(const PhaseSpaceField& f, const GaugeFunction& g) {
    if (f.hbar != g.hbar)
        throw GridMismatchError("gauge_classical_action: field and gauge hbar differ");
    const std::size_t nq = f.q_grid.size();
    const std::size_t np = f.p_grid.size();
    PhaseSpaceField out;
    out.q_grid = f.q_grid;
    out.p_grid = f.p_grid;
    out.hbar = f.hbar;
    out.values.assign(nq * np, 0.0);
    for (std::size_t i = 0; i < nq; ++i) {
        const double shift = g.dg(f.q_grid.x(i));
        const double* row = f.values.data() + i * np;
        for (std::size_t j = 0; j < np; ++j)
            out.values[i * np + j] = interp4(f.p_grid, row, 1, f.p_grid.x(j) - shift);
    }
    return out;
}

std::vector<double> gauge_kernel_profile(const GaugeFunction& g, double q,
                                         const Grid1D& dp_grid,
                                         const GaugeKernelOptions& opt) {
    const double hbar = g.hbar;
    const double p_extent =
        std::max(std::abs(dp_grid.x_min()), std::abs(dp_grid.x_max()));
    const std::size_t n_y =
        auto_offset_samples(g, std::abs(q), p_extent, opt.y_half_width, opt.n_y);
    const std::size_t half = n_y / 2;
    const double dy = opt.y_half_width / static_cast<double>(half);

    std::vector<double> out(dp_grid.size(), 0.0);
    const double scale = dy / (kPi * hbar);
    for (std::size_t l = 0; l < dp_grid.size(); ++l) {
        const double dp = dp_grid.x(l);
        double acc = 1.0;  // k = 0: taper and gauge phase are both unity
        for (std::size_t k = 1; k <= half; ++k) {
            const double y = static_cast<double>(k) * dy;
            const double phi = (g.g(q - y) - g.g(q + y)) / hbar + 2.0 * dp * y / hbar;
            acc += 2.0 * taper_value(y, opt.y_half_width, opt.taper_fraction) *
                   std::cos(phi);
        }
        out[l] = scale * acc;
    }
    return out;
}

double field_max_difference(const PhaseSpaceField& a, const PhaseSpaceField& b) {
    require_same_frame(a, b);
    double m = 0.0;
    for (std::size_t k = 0; k < a.values.size(); ++k)
        m = std::max(m, std::abs(a.values[k] - b.values[k]));
    return m;
}

double field_squared_difference(const PhaseSpaceField& a, const PhaseSpaceField& b) {
    require_same_frame(a, b);
    const std::vector<double> wq = a.q_grid.trapezoid_weights();
    const std::vector<double> wp = a.p_grid.trapezoid_weights();
    const std::size_t np = a.p_grid.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < a.q_grid.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < np; ++j) {
            const double d = a.values[i * np + j] - b.values[i * np + j];
            row += wp[j] * d * d;
        }
        acc += wq[i] * row;
    }
    return acc;
}

}  // namespace qhj
