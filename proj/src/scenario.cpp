#include "scenario.hpp"

#include <cmath>
#include <filesystem>
#include <set>
#include <utility>

#include "errors.hpp"
#include "generating_function.hpp"
#include "heisenberg.hpp"
#include "hj_series.hpp"
#include "phase_space.hpp"
#include "potential.hpp"
#include "propagator.hpp"
#include "split_step.hpp"
#include "version.hpp"
#include "wavefunction.hpp"

namespace qhj {

namespace {

using io::ordered_json;

/* ---------- config access with field-precise errors ---------- */

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

void require_object(const ordered_json& j, const std::string& where) {
    if (!j.is_object()) fail(where + " must be an object");
}

void reject_unknown(const ordered_json& j, const std::string& where,
                    const std::set<std::string>& allowed) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            fail("unknown field '" + it.key() + "' in " + where);
}

const ordered_json& require_field(const ordered_json& j, const std::string& where,
                                  const std::string& key) {
    auto it = j.find(key);
    if (it == j.end()) fail(where + " is missing required field '" + key + "'");
    return *it;
}

double get_number(const ordered_json& j, const std::string& where,
                  const std::string& key) {
    const ordered_json& v = require_field(j, where, key);
    if (!v.is_number()) fail(where + "." + key + " must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(where + "." + key + " must be finite");
    return x;
}

double get_number_or(const ordered_json& j, const std::string& where,
                     const std::string& key, double fallback) {
    if (!j.contains(key)) return fallback;
    return get_number(j, where, key);
}

std::size_t get_count(const ordered_json& j, const std::string& where,
                      const std::string& key, std::size_t lo, std::size_t hi) {
    const ordered_json& v = require_field(j, where, key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        fail(where + "." + key + " must be a nonnegative integer");
    const auto n = static_cast<std::size_t>(v.get<long long>());
    if (n < lo || n > hi)
        fail(where + "." + key + " must lie in [" + std::to_string(lo) + ", " +
             std::to_string(hi) + "]");
    return n;
}

std::string get_string(const ordered_json& j, const std::string& where,
                       const std::string& key) {
    const ordered_json& v = require_field(j, where, key);
    if (!v.is_string()) fail(where + "." + key + " must be a string");
    return v.get<std::string>();
}

/* ---------- schema pieces ---------- */

Potential parse_potential(const ordered_json& cfg) {
    return potential_from_json(require_field(cfg, "config", "potential"));
}

Grid1D parse_grid(const ordered_json& cfg, const std::string& key) {
    const ordered_json& j = require_field(cfg, "config", key);
    require_object(j, key);
    reject_unknown(j, key, {"min", "max", "n"});
    const double lo = get_number(j, key, "min");
    const double hi = get_number(j, key, "max");
    if (!(hi > lo)) fail(key + ".max must exceed " + key + ".min");
    const std::size_t n = get_count(j, key, "n", 8, 1u << 20);
    return Grid1D(lo, hi, n);
}

struct StateSpec {
    double center_q = 0.0, center_p = 0.0, width = 1.0;
};

StateSpec parse_state(const ordered_json& cfg) {
    const ordered_json& j = require_field(cfg, "config", "state");
    require_object(j, "state");
    reject_unknown(j, "state", {"center_q", "center_p", "width"});
    StateSpec s;
    s.center_q = get_number(j, "state", "center_q");
    s.center_p = get_number(j, "state", "center_p");
    s.width = get_number(j, "state", "width");
    if (!(s.width > 0.0)) fail("state.width must be positive");
    return s;
}

double parse_time(const ordered_json& cfg) {
    const double t = get_number(cfg, "config", "time");
    if (!(t > 0.0)) fail("config.time must be positive");
    return t;
}

double parse_hbar(const ordered_json& cfg) {
    const double h = get_number(cfg, "config", "hbar");
    if (!(h > 0.0)) fail("config.hbar must be positive");
    return h;
}

ordered_json tolerance_block(const ordered_json& cfg,
                             const std::set<std::string>& allowed) {
    if (!cfg.contains("tolerances")) return ordered_json::object();
    const ordered_json& j = cfg.at("tolerances");
    require_object(j, "tolerances");
    reject_unknown(j, "tolerances", allowed);
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it->is_number() || !(it->get<double>() > 0.0))
            fail("tolerances." + it.key() + " must be a positive number");
    }
    return j;
}

GfType parse_gf_type(const ordered_json& cfg) {
    if (!cfg.contains("gf_type")) return GfType::F1;
    const std::string s = get_string(cfg, "config", "gf_type");
    if (s == "F1") return GfType::F1;
    if (s == "F2") return GfType::F2;
    if (s == "F3") return GfType::F3;
    if (s == "F4") return GfType::F4;
    fail("config.gf_type must be one of F1, F2, F3, F4");
}

std::string parse_mode(const ordered_json& cfg) {
    if (!cfg.contains("mode")) return "closed_form";
    const std::string m = get_string(cfg, "config", "mode");
    if (m != "closed_form" && m != "series")
        fail("config.mode must be closed_form or series");
    return m;
}

GaugeKernelOptions parse_kernel_options(const ordered_json& cfg) {
    GaugeKernelOptions opt;
    if (!cfg.contains("kernel")) return opt;
    const ordered_json& j = cfg.at("kernel");
    require_object(j, "kernel");
    reject_unknown(j, "kernel", {"y_half_width", "n_y", "taper_fraction"});
    opt.y_half_width = get_number_or(j, "kernel", "y_half_width", opt.y_half_width);
    if (!(opt.y_half_width > 0.0)) fail("kernel.y_half_width must be positive");
    if (j.contains("n_y")) opt.n_y = get_count(j, "kernel", "n_y", 16, 1u << 22);
    opt.taper_fraction = get_number_or(j, "kernel", "taper_fraction", opt.taper_fraction);
    if (!(opt.taper_fraction > 0.0) || !(opt.taper_fraction < 1.0))
        fail("kernel.taper_fraction must lie in (0, 1)");
    return opt;
}

/* ---------- artifact plumbing ---------- */

struct Context {
    std::filesystem::path out_dir;
    ScenarioResult* result = nullptr;
    ordered_json derived = ordered_json::object();

    void record(const std::string& rel_path) {
        ArtifactRecord rec;
        rec.path = rel_path;
        const std::filesystem::path full = out_dir / rel_path;
        rec.bytes = std::filesystem::file_size(full);
        rec.fnv1a64 = io::to_hex(io::fnv1a64_file(full));
        result->artifacts.push_back(std::move(rec));
    }

    void check_below(const std::string& name, double value, double tolerance) {
        result->checks.push_back({name, value < tolerance, value, tolerance});
    }
    void check_above(const std::string& name, double value, double tolerance) {
        result->checks.push_back({name, value > tolerance, value, tolerance});
    }
};

void write_state_artifact(Context& ctx, const std::string& name,
                          const WaveFunction& psi) {
    std::vector<std::string> names{"q"};
    std::vector<std::vector<double>> cols{psi.grid().points()};
    io::append_complex_columns(names, cols, "psi", psi.values());
    io::write_csv(ctx.out_dir / name,
                  {"wave function samples on a uniform grid",
                   "hbar = " + io::format_double(psi.hbar())},
                  names, cols);
    ctx.record(name);
}

void write_field_artifact(Context& ctx, const std::string& name,
                          const PhaseSpaceField& f, const std::string& value_name) {
    const std::size_t nq = f.q_grid.size(), np = f.p_grid.size();
    std::vector<double> qs(nq * np), ps(nq * np), vs(nq * np);
    for (std::size_t i = 0; i < nq; ++i)
        for (std::size_t j = 0; j < np; ++j) {
            qs[i * np + j] = f.q_grid.x(i);
            ps[i * np + j] = f.p_grid.x(j);
            vs[i * np + j] = f.at(i, j);
        }
    io::write_csv(ctx.out_dir / name,
                  {"phase-space field, momentum index fastest",
                   "hbar = " + io::format_double(f.hbar)},
                  {"q", "p", value_name}, {qs, ps, vs});
    ctx.record(name);
}

/* ---------- scenarios ---------- */

const std::set<std::string> kCommonKeys{"scenario"};

void run_solve_hj(const ordered_json& cfg, Context& ctx, bool dry) {
    reject_unknown(cfg, "config",
                   {"scenario", "hbar", "potential", "time", "grid", "target_grid",
                    "transport", "tolerances"});
    Potential pot = parse_potential(cfg);
    const double t = parse_time(cfg);
    const double hbar = parse_hbar(cfg);
    Grid1D q_grid = parse_grid(cfg, "grid");
    Grid1D Q_grid = parse_grid(cfg, "target_grid");
    TransportOptions topt;
    if (cfg.contains("transport")) {
        const ordered_json& j = cfg.at("transport");
        require_object(j, "transport");
        reject_unknown(j, "transport", {"fan_size", "n_time_steps"});
        if (j.contains("fan_size"))
            topt.fan_size = get_count(j, "transport", "fan_size", 16, 1u << 16);
        if (j.contains("n_time_steps"))
            topt.n_time_steps = get_count(j, "transport", "n_time_steps", 16, 1u << 22);
    }
    const ordered_json tol = tolerance_block(cfg, {"residual"});
    if (dry) return;

    SeriesField field = solve_series_field(pot, q_grid, Q_grid, t, hbar, topt);

    const std::size_t nq = q_grid.size(), nQ = Q_grid.size();
    std::vector<double> qs(nq * nQ), Qs(nq * nQ);
    std::vector<complex> s1(nq * nQ);
    for (std::size_t i = 0; i < nq; ++i)
        for (std::size_t j = 0; j < nQ; ++j) {
            qs[i * nQ + j] = q_grid.x(i);
            Qs[i * nQ + j] = Q_grid.x(j);
            s1[i * nQ + j] = field.S1[i * nQ + j];
        }
    std::vector<std::string> names{"q", "Q", "S0"};
    std::vector<std::vector<double>> cols{qs, Qs, field.S0};
    io::append_complex_columns(names, cols, "S1", s1);
    io::write_csv(ctx.out_dir / "hj_field.csv",
                  {"principal function and first correction over (q, Q)",
                   "t = " + io::format_double(t), "hbar = " + io::format_double(hbar),
                   "assembled constant = " + io::format_double(field.constant.real()) +
                       " + " + io::format_double(field.constant.imag()) + " i"},
                  names, cols);
    ctx.record("hj_field.csv");

    const double q_mid = 0.5 * (q_grid.x_min() + q_grid.x_max());
    const double Q_mid = 0.5 * (Q_grid.x_min() + Q_grid.x_max());
    const double res = series_residual(pot, q_mid, Q_mid, t, hbar, topt);
    ctx.check_below("hj_residual", res, tol.value("residual", 1e-3));
}

WaveFunction evolve_by_mode(const ordered_json& cfg, const Potential& pot,
                            const WaveFunction& psi0, double t, double hbar,
                            const std::string& mode) {
    if (mode == "series") {
        SeriesField field = solve_series_field(pot, psi0.grid(), psi0.grid(), t, hbar);
        return build_propagator(field).apply(psi0);
    }
    int substeps = 0;
    if (cfg.contains("substeps"))
        substeps = static_cast<int>(get_count(cfg, "config", "substeps", 1, 4096));
    return evolve_quadratic(pot, psi0, t, substeps);
}

void run_propagate(const ordered_json& cfg, Context& ctx, bool dry) {
    reject_unknown(cfg, "config",
                   {"scenario", "hbar", "potential", "state", "time", "grid", "mode",
                    "substeps", "tolerances"});
    Potential pot = parse_potential(cfg);
    const double t = parse_time(cfg);
    const double hbar = parse_hbar(cfg);
    Grid1D grid = parse_grid(cfg, "grid");
    StateSpec st = parse_state(cfg);
    const std::string mode = parse_mode(cfg);
    const ordered_json tol = tolerance_block(cfg, {"norm"});
    if (dry) return;

    WaveFunction psi0 = make_gaussian(grid, st.center_q, st.center_p, st.width, hbar);
    write_state_artifact(ctx, "initial_state.csv", psi0);
    WaveFunction psi_t = evolve_by_mode(cfg, pot, psi0, t, hbar, mode);
    write_state_artifact(ctx, "final_state.csv", psi_t);

    const double norm_default = mode == "series" ? 1e-3 : 1e-6;
    ctx.check_below("norm_preserved", std::abs(psi_t.norm() - 1.0),
                    tol.value("norm", norm_default));
}

void run_compare_oracle(const ordered_json& cfg, Context& ctx, bool dry) {
    reject_unknown(cfg, "config",
                   {"scenario", "hbar", "potential", "state", "time", "grid", "mode",
                    "substeps", "oracle", "tolerances"});
    Potential pot = parse_potential(cfg);
    const double t = parse_time(cfg);
    const double hbar = parse_hbar(cfg);
    Grid1D grid = parse_grid(cfg, "grid");
    StateSpec st = parse_state(cfg);
    const std::string mode = parse_mode(cfg);
    SplitStepOptions sopt;
    if (cfg.contains("oracle")) {
        const ordered_json& j = cfg.at("oracle");
        require_object(j, "oracle");
        reject_unknown(j, "oracle", {"n_steps"});
        if (j.contains("n_steps"))
            sopt.n_steps = get_count(j, "oracle", "n_steps", 16, 1u << 24);
    }
    const ordered_json tol = tolerance_block(cfg, {"l2_error", "infidelity"});
    if (dry) return;

    WaveFunction psi0 = make_gaussian(grid, st.center_q, st.center_p, st.width, hbar);
    WaveFunction via_kernel = evolve_by_mode(cfg, pot, psi0, t, hbar, mode);
    WaveFunction via_oracle = split_step_evolve(pot, psi0, t, sopt);
    write_state_artifact(ctx, "final_kernel.csv", via_kernel);
    write_state_artifact(ctx, "final_oracle.csv", via_oracle);

    OracleComparison cmp = compare_states(via_kernel, via_oracle);
    ctx.check_below("l2_error", cmp.l2_error, tol.value("l2_error", 1e-4));
    ctx.check_below("infidelity", 1.0 - cmp.fidelity, tol.value("infidelity", 1e-3));
}

void run_wigner_evolve(const ordered_json& cfg, Context& ctx, bool dry) {
    reject_unknown(cfg, "config",
                   {"scenario", "hbar", "potential", "state", "time", "grid",
                    "momentum_grid", "husimi_alpha", "substeps", "tolerances"});
    Potential pot = parse_potential(cfg);
    const double t = parse_time(cfg);
    const double hbar = parse_hbar(cfg);
    Grid1D q_grid = parse_grid(cfg, "grid");
    Grid1D p_grid = parse_grid(cfg, "momentum_grid");
    StateSpec st = parse_state(cfg);
    double alpha = 0.0;
    if (cfg.contains("husimi_alpha")) {
        alpha = get_number(cfg, "config", "husimi_alpha");
        if (!(alpha > 0.0)) fail("config.husimi_alpha must be positive");
    }
    const ordered_json tol = tolerance_block(cfg, {"diagram"});
    if (dry) return;

    WaveFunction psi0 = make_gaussian(q_grid, st.center_q, st.center_p, st.width, hbar);
    PhaseSpaceField w0 = wigner_transform(psi0, p_grid);
    write_field_artifact(ctx, "wigner_initial.csv", w0, "w");

    WaveFunction psi_t = evolve_by_mode(cfg, pot, psi0, t, hbar, "closed_form");
    PhaseSpaceField w_state = wigner_transform(psi_t, p_grid);
    write_field_artifact(ctx, "wigner_evolved.csv", w_state, "w");

    LinearCanonicalMap back =
        extract_canonical_map(closed_form_generating(pot, GfType::F1, t, hbar));
    PhaseSpaceField w_flow = transport_field(w0, back);
    write_field_artifact(ctx, "wigner_transported.csv", w_flow, "w");

    if (alpha > 0.0) {
        PhaseSpaceField h = husimi_from_wigner(w_state, alpha);
        write_field_artifact(ctx, "husimi_evolved.csv", h, "h");
    }
    ctx.check_below("diagram_max_difference", field_max_difference(w_state, w_flow),
                    tol.value("diagram", 1e-3));
}

void run_heisenberg(const ordered_json& cfg, Context& ctx, bool dry) {
    reject_unknown(cfg, "config",
                   {"scenario", "hbar", "potential", "times", "stencil_h",
                    "tolerances"});
    Potential pot = parse_potential(cfg);
    const double hbar = parse_hbar(cfg);
    const ordered_json& times_j = require_field(cfg, "config", "times");
    if (!times_j.is_array() || times_j.empty())
        fail("config.times must be a nonempty array of positive numbers");
    std::vector<double> times;
    for (const auto& v : times_j) {
        if (!v.is_number() || !(v.get<double>() > 0.0))
            fail("config.times entries must be positive numbers");
        times.push_back(v.get<double>());
    }
    const double h = get_number_or(cfg, "config", "stencil_h", 1e-3);
    if (!(h > 0.0)) fail("config.stencil_h must be positive");
    const ordered_json tol = tolerance_block(cfg, {"eom_residual", "commutator"});
    if (dry) return;

    auto family = [&](double tt) {
        return heisenberg_from_generating(
            closed_form_generating(pot, GfType::F1, tt, hbar), tt);
    };

    std::vector<double> c_t, c_qq, c_qp, c_q0, c_pq, c_pp, c_p0, c_res, c_def;
    double worst_res = 0.0, worst_def = 0.0;
    for (double tt : times) {
        HeisenbergSolution sol = family(tt);
        HeisenbergResidual res = verify_heisenberg_equations(pot, family, tt, h);
        c_t.push_back(tt);
        c_qq.push_back(sol.qq);
        c_qp.push_back(sol.qp);
        c_q0.push_back(sol.q0);
        c_pq.push_back(sol.pq);
        c_pp.push_back(sol.pp);
        c_p0.push_back(sol.p0);
        c_res.push_back(res.max_eom_residual);
        c_def.push_back(res.commutator_defect);
        worst_res = std::max(worst_res, res.max_eom_residual);
        worst_def = std::max(worst_def, res.commutator_defect);
    }
    io::write_csv(ctx.out_dir / "heisenberg.csv",
                  {"affine operator flow q_H = qq q + qp p + q0, "
                   "p_H = pq q + pp p + p0",
                   "hbar = " + io::format_double(hbar)},
                  {"t", "qq", "qp", "q0", "pq", "pp", "p0", "eom_residual",
                   "commutator_defect"},
                  {c_t, c_qq, c_qp, c_q0, c_pq, c_pp, c_p0, c_res, c_def});
    ctx.record("heisenberg.csv");

    ctx.check_below("max_eom_residual", worst_res, tol.value("eom_residual", 1e-6));
    ctx.check_below("max_commutator_defect", worst_def, tol.value("commutator", 1e-10));
}

void run_unitarity(const ordered_json& cfg, Context& ctx, bool dry) {
    reject_unknown(cfg, "config",
                   {"scenario", "hbar", "potential", "time", "grid", "source_grid",
                    "gf_type", "tolerances"});
    Potential pot = parse_potential(cfg);
    const double t = parse_time(cfg);
    Grid1D x_grid = parse_grid(cfg, "grid");
    Grid1D y_grid = cfg.contains("source_grid") ? parse_grid(cfg, "source_grid") : x_grid;
    GfType type = parse_gf_type(cfg);

    const ordered_json& hj = require_field(cfg, "config", "hbar");
    bool reciprocity = false;
    double hbar = 1.0;
    if (hj.is_string()) {
        if (hj.get<std::string>() != "reciprocity")
            fail("config.hbar must be a positive number or the string "
                 "\"reciprocity\"");
        reciprocity = true;
    } else {
        hbar = parse_hbar(cfg);
    }
    const ordered_json tol = tolerance_block(cfg, {"gram_deviation"});
    if (dry) return;

    QuadraticGeneratingFunction gf = closed_form_generating(pot, type, t, hbar);
    if (reciprocity) {
        hbar = reciprocity_hbar(gf.beta, x_grid.spacing(), y_grid.spacing(),
                                y_grid.size());
        gf = closed_form_generating(pot, type, t, hbar);
        ctx.derived["hbar"] = hbar;
        ctx.derived["beta"] = gf.beta;
    }
    UnitarityReport rep = verify_unitarity(gf, x_grid, y_grid);
    ctx.check_below("gram_deviation", rep.deviation(),
                    tol.value("gram_deviation", 1e-3));
}

void run_kernel_compare(const ordered_json& cfg, Context& ctx, bool dry) {
    reject_unknown(cfg, "config",
                   {"scenario", "hbar", "gauge", "state", "grid", "momentum_grid",
                    "kernel", "profile_q", "tolerances"});
    const double hbar = parse_hbar(cfg);
    Grid1D q_grid = parse_grid(cfg, "grid");
    Grid1D p_grid = parse_grid(cfg, "momentum_grid");
    StateSpec st = parse_state(cfg);
    const ordered_json& gj = require_field(cfg, "config", "gauge");
    require_object(gj, "gauge");
    reject_unknown(gj, "gauge", {"coeffs"});
    const ordered_json& cs = require_field(gj, "gauge", "coeffs");
    if (!cs.is_array() || cs.empty() || cs.size() > 16)
        fail("gauge.coeffs must be a nonempty array of at most 16 numbers");
    std::vector<double> coeffs;
    for (const auto& c : cs) {
        if (!c.is_number() || !std::isfinite(c.get<double>()))
            fail("gauge.coeffs entries must be finite numbers");
        coeffs.push_back(c.get<double>());
    }
    GaugeKernelOptions kopt = parse_kernel_options(cfg);
    const ordered_json tol = tolerance_block(cfg, {"max_difference", "separation_ratio"});
    if (dry) return;

    GaugeFunction g = gauge_generating_function(coeffs, hbar);
    WaveFunction psi = make_gaussian(q_grid, st.center_q, st.center_p, st.width, hbar);
    PhaseSpaceField w = wigner_transform(psi, p_grid);
    PhaseSpaceField quantum = gauge_quantum_action(w, g, kopt);
    PhaseSpaceField classical = gauge_classical_action(w, g);
    write_field_artifact(ctx, "gauge_quantum.csv", quantum, "w");
    write_field_artifact(ctx, "gauge_classical.csv", classical, "w");

    if (g.is_quadratic()) {
        ctx.check_below("max_difference", field_max_difference(quantum, classical),
                        tol.value("max_difference", 1e-4));
    } else {
        // Noise floor: the same comparison for the quadratic truncation, where
        // kernel and shear agree identically.
        std::vector<double> trunc(coeffs.begin(),
                                  coeffs.begin() + std::min<std::size_t>(3, coeffs.size()));
        GaugeFunction g2 = gauge_generating_function(trunc, hbar);
        const double floor2 = field_squared_difference(
            gauge_quantum_action(w, g2, kopt), gauge_classical_action(w, g2));
        const double split2 = field_squared_difference(quantum, classical);
        const double ratio = split2 / std::max(floor2, 1e-300);
        ctx.derived["noise_floor"] = floor2;
        ctx.derived["second_moment"] = split2;
        ctx.check_above("separation_ratio", ratio,
                        tol.value("separation_ratio", 10.0));
    }
    if (cfg.contains("profile_q")) {
        const double pq = get_number(cfg, "config", "profile_q");
        std::vector<double> prof = gauge_kernel_profile(g, pq, p_grid, kopt);
        io::write_csv(ctx.out_dir / "kernel_profile.csv",
                      {"row kernel over momentum transfer at fixed position",
                       "q = " + io::format_double(pq),
                       "hbar = " + io::format_double(hbar)},
                      {"dp", "kernel"}, {p_grid.points(), prof});
        ctx.record("kernel_profile.csv");
    }
}

using Runner = void (*)(const ordered_json&, Context&, bool);

const std::vector<std::pair<std::string, Runner>>& runners() {
    static const std::vector<std::pair<std::string, Runner>> table{
        {"solve-hj", run_solve_hj},
        {"propagate", run_propagate},
        {"compare-oracle", run_compare_oracle},
        {"wigner-evolve", run_wigner_evolve},
        {"heisenberg", run_heisenberg},
        {"unitarity", run_unitarity},
        {"kernel-compare", run_kernel_compare},
    };
    return table;
}

Runner find_runner(const ordered_json& cfg) {
    require_object(cfg, "config");
    const std::string name = get_string(cfg, "config", "scenario");
    for (const auto& [n, r] : runners())
        if (n == name) return r;
    fail("config.scenario '" + name + "' is not known; see list-scenarios");
}

int exit_code_for(const Error& e) {
    return e.kind() == ErrorKind::config_error ? 1 : 3;
}

}  // namespace

Potential potential_from_json(const io::ordered_json& spec) {
    require_object(spec, "potential");
    const std::string kind = get_string(spec, "potential", "kind");
    if (kind == "free") {
        reject_unknown(spec, "potential", {"kind"});
        return Potential::free();
    }
    if (kind == "constant_force") {
        reject_unknown(spec, "potential", {"kind", "a"});
        return Potential::constant_force(get_number(spec, "potential", "a"));
    }
    if (kind == "harmonic") {
        reject_unknown(spec, "potential", {"kind", "omega"});
        const double omega = get_number(spec, "potential", "omega");
        if (!(omega > 0.0)) fail("potential.omega must be positive");
        return Potential::harmonic(omega);
    }
    if (kind == "polynomial") {
        reject_unknown(spec, "potential", {"kind", "coeffs"});
        const ordered_json& cs = require_field(spec, "potential", "coeffs");
        if (!cs.is_array() || cs.empty() || cs.size() > 16)
            fail("potential.coeffs must be a nonempty array of at most 16 numbers");
        std::vector<double> coeffs;
        for (const auto& c : cs) {
            if (!c.is_number() || !std::isfinite(c.get<double>()))
                fail("potential.coeffs entries must be finite numbers");
            coeffs.push_back(c.get<double>());
        }
        return Potential::polynomial(std::move(coeffs));
    }
    fail("potential.kind must be one of free, constant_force, harmonic, polynomial");
}

const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [n, r] : runners()) v.push_back(n);
        return v;
    }();
    return names;
}

void validate_config(const io::ordered_json& config) {
    Context ctx;
    ScenarioResult scratch;
    ctx.result = &scratch;
    find_runner(config)(config, ctx, /*dry=*/true);
}

ScenarioResult run_scenario(const io::ordered_json& config, const std::string& out_dir,
                            long seed) {
    ScenarioResult res;
    Context ctx;
    ctx.out_dir = out_dir;
    ctx.result = &res;

    try {
        std::filesystem::create_directories(ctx.out_dir);
        Runner r = find_runner(config);
        r(config, ctx, /*dry=*/true);   // full validation before any output
        r(config, ctx, /*dry=*/false);
        bool all_passed = true;
        for (const auto& c : res.checks) all_passed = all_passed && c.passed;
        res.exit_code = all_passed ? 0 : 2;
        res.status = all_passed ? "ok" : "checks-failed";
    } catch (const Error& e) {
        res.exit_code = exit_code_for(e);
        res.status = "error";
        res.error_kind = error_kind_name(e.kind());
        res.error_message = e.what();
        res.error_code = static_cast<int>(e.kind());
    } catch (const std::exception& e) {
        res.exit_code = 3;
        res.status = "error";
        res.error_kind = "unknown";
        res.error_message = e.what();
        res.error_code = 99;
    }

    ordered_json manifest;
    manifest["tool"] = "qhj";
    manifest["version"] = kVersionString;
    manifest["seed"] = seed;
    manifest["config"] = config;
    if (!ctx.derived.empty()) manifest["derived"] = ctx.derived;
    manifest["status"] = res.status;
    if (res.status == "error")
        manifest["error"] = {{"kind", res.error_kind}, {"message", res.error_message}};
    else
        manifest["error"] = nullptr;
    ordered_json checks = ordered_json::array();
    for (const auto& c : res.checks)
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"value", c.value},
                          {"tolerance", c.tolerance}});
    manifest["checks"] = checks;
    ordered_json artifacts = ordered_json::array();
    for (const auto& a : res.artifacts)
        artifacts.push_back(
            {{"path", a.path}, {"bytes", a.bytes}, {"fnv1a64", a.fnv1a64}});
    manifest["artifacts"] = artifacts;

    try {
        const std::filesystem::path mpath = ctx.out_dir / "manifest.json";
        io::write_json_file(mpath, manifest);
        res.manifest_path = mpath.string();
    } catch (const std::exception& e) {
        if (res.exit_code == 0) res.exit_code = 3;
        if (res.error_message.empty()) res.error_message = e.what();
    }
    return res;
}

}  // namespace qhj
