#include "propagator.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "errors.hpp"

namespace qhj {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kMaxPhaseStep = 0.5 * kPi;

/* Largest |a x + b y + c| over the corners of a grid-pair window. */
double corner_bound(double a, double b, double c, const Grid1D& gx, const Grid1D& gy) {
    double best = 0.0;
    for (double x : {gx.x_min(), gx.x_max()})
        for (double y : {gy.x_min(), gy.x_max()})
            best = std::max(best, std::abs(a * x + b * y + c));
    return best;
}

void require_resolvable(double phase_step_x, double phase_step_y) {
    if (phase_step_x >= kMaxPhaseStep || phase_step_y >= kMaxPhaseStep)
        throw AliasingError(
            "build_propagator: kernel phase advances " + std::to_string(phase_step_x) +
            " (target) / " + std::to_string(phase_step_y) +
            " (source) radians per sample; refine the grids or shorten the step");
}

}  // namespace

PropagatorMatrix::PropagatorMatrix(Grid1D target, Grid1D source, double hbar,
                                   std::vector<std::complex<double>> entries)
    : target_(std::move(target)), source_(std::move(source)), hbar_(hbar),
      entries_(std::move(entries)) {
    if (!(hbar_ > 0.0) || !std::isfinite(hbar_))
        throw InvalidArgumentError("PropagatorMatrix: hbar must be positive and finite");
    if (entries_.size() != target_.size() * source_.size())
        throw InvalidArgumentError("PropagatorMatrix: entry count does not match the grid pair");
}

WaveFunction PropagatorMatrix::apply(const WaveFunction& psi) const {
    if (!(psi.grid() == source_) || psi.hbar() != hbar_)
        throw GridMismatchError("PropagatorMatrix::apply: state is not on the source grid");
    const std::size_t nt = target_.size();
    const std::size_t ns = source_.size();
    const std::vector<double> w = source_.trapezoid_weights();
    const std::vector<std::complex<double>>& v = psi.values();

    std::vector<std::complex<double>> weighted(ns);
    for (std::size_t j = 0; j < ns; ++j) weighted[j] = w[j] * v[j];

    std::vector<std::complex<double>> out(nt);
    for (std::size_t i = 0; i < nt; ++i) {
        std::complex<double> acc(0.0, 0.0);
        const std::complex<double>* row = entries_.data() + i * ns;
        for (std::size_t j = 0; j < ns; ++j) acc += row[j] * weighted[j];
        out[i] = acc;
    }
    return WaveFunction(target_, std::move(out), hbar_);
}

WaveFunction PropagatorMatrix::apply_adjoint(const WaveFunction& psi) const {
    if (!(psi.grid() == target_) || psi.hbar() != hbar_)
        throw GridMismatchError("PropagatorMatrix::apply_adjoint: state is not on the target grid");
    const std::size_t nt = target_.size();
    const std::size_t ns = source_.size();
    const std::vector<double> w = target_.trapezoid_weights();
    const std::vector<std::complex<double>>& v = psi.values();

    std::vector<std::complex<double>> out(ns, std::complex<double>(0.0, 0.0));
    for (std::size_t i = 0; i < nt; ++i) {
        const std::complex<double> wi = w[i] * v[i];
        const std::complex<double>* row = entries_.data() + i * ns;
        for (std::size_t j = 0; j < ns; ++j) out[j] += std::conj(row[j]) * wi;
    }
    return WaveFunction(source_, std::move(out), hbar_);
}

PropagatorMatrix build_propagator(const QuadraticGeneratingFunction& gf,
                                  const Grid1D& target, const Grid1D& source) {
    // dS/dx = alpha x + beta y + u, dS/dy = beta x + gamma y + v.
    const double grad_x = corner_bound(gf.alpha, gf.beta, gf.u, target, source);
    const double grad_y = corner_bound(gf.beta, gf.gamma, gf.v, target, source);
    require_resolvable(target.spacing() * grad_x / gf.hbar, source.spacing() * grad_y / gf.hbar);

    const std::size_t nt = target.size();
    const std::size_t ns = source.size();
    std::vector<std::complex<double>> entries(nt * ns);
    for (std::size_t i = 0; i < nt; ++i) {
        const double x = target.x(i);
        for (std::size_t j = 0; j < ns; ++j)
            entries[i * ns + j] = gf.kernel(x, source.x(j));
    }
    return PropagatorMatrix(target, source, gf.hbar, std::move(entries));
}

PropagatorMatrix build_propagator(const SeriesField& field) {
    const Grid1D& target = field.q_grid;
    const Grid1D& source = field.Q_grid;
    const std::size_t nt = target.size();
    const std::size_t ns = source.size();

    // Real phase advance between neighbouring samples, in either direction.
    double step_x = 0.0;
    double step_y = 0.0;
    for (std::size_t i = 0; i < nt; ++i)
        for (std::size_t j = 0; j + 1 < ns; ++j)
            step_y = std::max(step_y,
                std::abs(std::real(field.total(i, j + 1) - field.total(i, j))));
    for (std::size_t i = 0; i + 1 < nt; ++i)
        for (std::size_t j = 0; j < ns; ++j)
            step_x = std::max(step_x,
                std::abs(std::real(field.total(i + 1, j) - field.total(i, j))));
    require_resolvable(step_x / field.hbar, step_y / field.hbar);

    std::vector<std::complex<double>> entries(nt * ns);
    for (std::size_t i = 0; i < nt; ++i)
        for (std::size_t j = 0; j < ns; ++j)
            entries[i * ns + j] = field.kernel(i, j);
    return PropagatorMatrix(target, source, field.hbar, std::move(entries));
}

WaveFunction evolve_quadratic(const Potential& pot, const WaveFunction& psi,
                              double t, int min_substeps) {
    if (!std::isfinite(t) || t < 0.0)
        throw InvalidArgumentError("evolve_quadratic: time must be finite and nonnegative");
    if (!pot.is_quadratic())
        throw UnsupportedPotentialError(
            "evolve_quadratic: closed-form kernels require a quadratic potential");
    if (t == 0.0) return psi;

    std::size_t n_sub = static_cast<std::size_t>(std::max(1, min_substeps));
    if (const auto* h = std::get_if<HarmonicPotential>(&pot.spec())) {
        // Keep each substep clear of the kernel caustics at multiples of
        // pi / omega and short enough that the focusing stays mild.
        const double omega = h->omega;
        std::size_t n = std::max<std::size_t>(n_sub,
            static_cast<std::size_t>(std::ceil(omega * t / 1.4)));
        for (std::size_t extra = 0; extra < 16; ++extra, ++n) {
            const double tau = t / static_cast<double>(n);
            if (std::abs(std::sin(omega * tau)) >= 0.2) break;
        }
        n_sub = n;
    }

    const double tau = t / static_cast<double>(n_sub);
    const QuadraticGeneratingFunction gf =
        closed_form_generating(pot, GfType::F1, tau, psi.hbar());
    const PropagatorMatrix step = build_propagator(gf, psi.grid(), psi.grid());

    WaveFunction state = psi;
    for (std::size_t s = 0; s < n_sub; ++s) state = step.apply(state);
    if (state.edge_fraction() > 1e-5)
        throw DomainTruncationError(
            "evolve_quadratic: evolved state reached the window edge; enlarge the grid");
    return state;
}

WaveFunction momentum_representation(const WaveFunction& psi, const Grid1D& p_grid) {
    const Grid1D& q_grid = psi.grid();
    const double hbar = psi.hbar();
    const std::vector<double> w = q_grid.trapezoid_weights();
    const std::vector<std::complex<double>>& v = psi.values();
    const double norm = 1.0 / std::sqrt(2.0 * kPi * hbar);

    std::vector<std::complex<double>> out(p_grid.size());
    for (std::size_t j = 0; j < p_grid.size(); ++j) {
        const double p = p_grid.x(j);
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t i = 0; i < q_grid.size(); ++i) {
            const double phase = -p * q_grid.x(i) / hbar;
            acc += std::complex<double>(std::cos(phase), std::sin(phase)) * (w[i] * v[i]);
        }
        out[j] = norm * acc;
    }
    return WaveFunction(p_grid, std::move(out), hbar);
}

OracleComparison compare_states(const WaveFunction& left, const WaveFunction& right) {
    OracleComparison cmp;
    cmp.l2_error = l2_distance(left, right);
    cmp.l2_error_phase_aligned = l2_distance_phase_aligned(left, right);
    cmp.fidelity = fidelity(left, right);
    cmp.norm_left = left.norm();
    cmp.norm_right = right.norm();
    return cmp;
}

}  // namespace qhj
