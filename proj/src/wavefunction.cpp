#include "wavefunction.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"
#include "fft.hpp"

namespace qhj {

namespace {

constexpr double kTailMassLimit = 1e-8;

void require_same_frame(const WaveFunction& a, const WaveFunction& b) {
    if (a.grid() != b.grid())
        throw GridMismatchError("wavefunction: grids differ");
    if (a.hbar() != b.hbar())
        throw GridMismatchError("wavefunction: hbar differs");
}

}  // namespace

WaveFunction::WaveFunction(Grid1D grid, std::vector<complex> values, double hbar)
    : grid_(grid), values_(std::move(values)), hbar_(hbar) {
    if (values_.size() != grid_.size())
        throw GridMismatchError("wavefunction: sample count does not match grid");
    if (!(hbar > 0.0))
        throw InvalidArgumentError("wavefunction: hbar must be positive");
}

double WaveFunction::norm() const {
    const auto w = grid_.trapezoid_weights();
    double s = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i)
        s += w[i] * std::norm(values_[i]);
    return std::sqrt(s);
}

void WaveFunction::normalize() {
    const double n = norm();
    if (n == 0.0) throw InvalidArgumentError("wavefunction: cannot normalize zero state");
    for (auto& v : values_) v /= n;
}

double WaveFunction::edge_fraction(std::size_t margin) const {
    double peak = 0.0;
    for (const auto& v : values_) peak = std::max(peak, std::abs(v));
    if (peak == 0.0) return 0.0;
    double edge = 0.0;
    margin = std::min(margin, values_.size() / 2);
    for (std::size_t i = 0; i < margin; ++i) {
        edge = std::max(edge, std::abs(values_[i]));
        edge = std::max(edge, std::abs(values_[values_.size() - 1 - i]));
    }
    return edge / peak;
}

double WaveFunction::expectation_q() const {
    const auto w = grid_.trapezoid_weights();
    double s = 0.0, m = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const double d = w[i] * std::norm(values_[i]);
        s += d;
        m += d * grid_.x(i);
    }
    return m / s;
}

double WaveFunction::variance_q() const {
    const double mu = expectation_q();
    const auto w = grid_.trapezoid_weights();
    double s = 0.0, m = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const double d = w[i] * std::norm(values_[i]);
        const double dq = grid_.x(i) - mu;
        s += d;
        m += d * dq * dq;
    }
    return m / s;
}

namespace {

/* Spectral momentum moments: FFT the samples, weight |c_k|^2 with the signed
 * grid momenta hbar*2*pi*k/(N*dx). The window is treated as one period, which
 * is accurate for states that vanish at the edges. */
void momentum_moments(const WaveFunction& psi, double* mean, double* second) {
    const std::size_t n = psi.size();
    Fft fft(n);
    std::vector<complex> c(psi.values());
    fft.forward(c);
    const double dp = 2.0 * M_PI * psi.hbar() /
                      (static_cast<double>(n) * psi.grid().spacing());
    double w = 0.0, m1 = 0.0, m2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double p = dp * static_cast<double>(Fft::freq_index(i, n));
        const double a = std::norm(c[i]);
        w += a;
        m1 += a * p;
        m2 += a * p * p;
    }
    if (mean) *mean = m1 / w;
    if (second) *second = m2 / w;
}

}  // namespace

double WaveFunction::expectation_p() const {
    double mean = 0.0;
    momentum_moments(*this, &mean, nullptr);
    return mean;
}

double WaveFunction::variance_p() const {
    double mean = 0.0, second = 0.0;
    momentum_moments(*this, &mean, &second);
    return second - mean * mean;
}

WaveFunction make_gaussian(const Grid1D& grid, double center_q, double center_p,
                           double width, double hbar) {
    if (!(width > 0.0))
        throw InvalidArgumentError("gaussian: width must be positive");
    if (!(hbar > 0.0))
        throw InvalidArgumentError("gaussian: hbar must be positive");
    const double margin_lo = center_q - grid.x_min();
    const double margin_hi = grid.x_max() - center_q;
    if (margin_lo < 5.0 * width || margin_hi < 5.0 * width)
        throw DomainTruncationError(
            "gaussian: center must sit at least 5 widths inside the window");
    // Tail mass of |psi|^2 beyond the nearer edge: erfc(d / (sqrt(2) width)).
    const double d = std::min(margin_lo, margin_hi);
    const double tail = std::erfc(d / (std::sqrt(2.0) * width));
    if (tail > kTailMassLimit)
        throw DomainTruncationError("gaussian: tail mass outside the window exceeds 1e-8");

    std::vector<complex> v(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double q = grid.x(i);
        const double dq = q - center_q;
        const double envelope = std::exp(-dq * dq / (4.0 * width * width));
        const double phase = center_p * q / hbar;
        v[i] = envelope * complex(std::cos(phase), std::sin(phase));
    }
    WaveFunction psi(grid, std::move(v), hbar);
    psi.normalize();
    return psi;
}

complex inner_product(const WaveFunction& a, const WaveFunction& b) {
    require_same_frame(a, b);
    const auto w = a.grid().trapezoid_weights();
    complex s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += w[i] * std::conj(a[i]) * b[i];
    return s;
}

double l2_distance(const WaveFunction& a, const WaveFunction& b) {
    require_same_frame(a, b);
    const auto w = a.grid().trapezoid_weights();
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += w[i] * std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

double l2_distance_phase_aligned(const WaveFunction& a, const WaveFunction& b) {
    const double na = a.norm(), nb = b.norm();
    const double ov = std::abs(inner_product(a, b));
    const double d2 = na * na + nb * nb - 2.0 * ov;
    return std::sqrt(std::max(d2, 0.0));
}

double fidelity(const WaveFunction& a, const WaveFunction& b) {
    const double na = a.norm(), nb = b.norm();
    const double ov = std::abs(inner_product(a, b));
    return (ov * ov) / (na * na * nb * nb);
}

}  // namespace qhj
