/* C API boundary. Every entry point catches all exceptions, stores the
 * message in a thread-local buffer, and maps error kinds to status codes. */

#include "qhj/qhj.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "errors.hpp"
#include "generating_function.hpp"
#include "potential.hpp"
#include "propagator.hpp"
#include "scenario.hpp"
#include "version.hpp"
#include "wavefunction.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }
void clear_error() { g_last_error.clear(); }

qhj_status status_from_kind(qhj::ErrorKind kind) {
    int v = static_cast<int>(kind);
    if (v >= 1 && v <= 13) return static_cast<qhj_status>(v);
    return QHJ_ERR_UNKNOWN;
}

/* Runs fn inside the standard catch net and reports a status. */
template <typename Fn>
qhj_status guarded(Fn&& fn) {
    clear_error();
    try {
        return fn();
    } catch (const qhj::Error& e) {
        set_error(e.what());
        return status_from_kind(e.kind());
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return QHJ_ERR_UNKNOWN;
    } catch (const std::exception& e) {
        set_error(e.what());
        return QHJ_ERR_UNKNOWN;
    } catch (...) {
        set_error("unknown error");
        return QHJ_ERR_UNKNOWN;
    }
}

qhj::io::ordered_json parse_json_text(const char* text, const char* what) {
    if (text == nullptr)
        throw qhj::InvalidArgumentError(std::string(what) + " is null");
    qhj::io::ordered_json j =
        qhj::io::ordered_json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw qhj::ConfigError(std::string(what) + " is not valid JSON");
    return j;
}

qhj::GfType gf_type_from_int(int t) {
    if (t < 1 || t > 4)
        throw qhj::InvalidArgumentError("generating-function type must be 1..4");
    return static_cast<qhj::GfType>(t);
}

}  // namespace

struct qhj_generating_function {
    qhj::QuadraticGeneratingFunction gf;
};

extern "C" {

QHJ_API void qhj_version(int* major, int* minor, int* patch) {
    if (major) *major = qhj::kVersionMajor;
    if (minor) *minor = qhj::kVersionMinor;
    if (patch) *patch = qhj::kVersionPatch;
}

QHJ_API const char* qhj_last_error(void) { return g_last_error.c_str(); }

QHJ_API qhj_status qhj_run_scenario(const char* config_json, const char* out_dir,
                                    long seed, int* exit_code) {
    return guarded([&]() -> qhj_status {
        if (out_dir == nullptr)
            throw qhj::InvalidArgumentError("out_dir is null");
        qhj::io::ordered_json config = parse_json_text(config_json, "config");
        qhj::ScenarioResult res = qhj::run_scenario(config, out_dir, seed);
        if (exit_code) *exit_code = res.exit_code;
        if (res.exit_code == 0) return QHJ_OK;
        set_error(res.error_message.empty()
                      ? "scenario checks failed; see manifest.json"
                      : res.error_message);
        if (res.exit_code == 2) return QHJ_ERR_CHECKS_FAILED;
        if (res.exit_code == 1) return QHJ_ERR_CONFIG;
        if (res.error_code >= 1 && res.error_code <= 13)
            return static_cast<qhj_status>(res.error_code);
        return QHJ_ERR_UNKNOWN;
    });
}

QHJ_API qhj_status qhj_validate_config(const char* config_json) {
    return guarded([&]() -> qhj_status {
        qhj::io::ordered_json config = parse_json_text(config_json, "config");
        qhj::validate_config(config);
        return QHJ_OK;
    });
}

QHJ_API const char* qhj_list_scenarios(void) {
    static const std::string joined = [] {
        std::string s;
        for (const auto& name : qhj::scenario_names()) {
            if (!s.empty()) s += '\n';
            s += name;
        }
        return s;
    }();
    return joined.c_str();
}

QHJ_API qhj_status qhj_closed_form_generating(const char* potential_json,
                                              int gf_type, double t, double hbar,
                                              qhj_generating_function** out) {
    return guarded([&]() -> qhj_status {
        if (out == nullptr)
            throw qhj::InvalidArgumentError("out pointer is null");
        *out = nullptr;
        qhj::io::ordered_json spec = parse_json_text(potential_json, "potential");
        qhj::Potential pot = qhj::potential_from_json(spec);
        qhj::QuadraticGeneratingFunction gf =
            qhj::closed_form_generating(pot, gf_type_from_int(gf_type), t, hbar);
        *out = new qhj_generating_function{gf};
        return QHJ_OK;
    });
}

QHJ_API qhj_status qhj_convert_generating(const qhj_generating_function* gf,
                                          int target_type,
                                          qhj_generating_function** out) {
    return guarded([&]() -> qhj_status {
        if (gf == nullptr)
            throw qhj::InvalidArgumentError("generating function is null");
        if (out == nullptr)
            throw qhj::InvalidArgumentError("out pointer is null");
        *out = nullptr;
        qhj::QuadraticGeneratingFunction converted =
            qhj::convert_type(gf->gf, gf_type_from_int(target_type));
        *out = new qhj_generating_function{converted};
        return QHJ_OK;
    });
}

QHJ_API qhj_status qhj_generating_coefficients(const qhj_generating_function* gf,
                                               double coeffs[8]) {
    return guarded([&]() -> qhj_status {
        if (gf == nullptr)
            throw qhj::InvalidArgumentError("generating function is null");
        if (coeffs == nullptr)
            throw qhj::InvalidArgumentError("coeffs pointer is null");
        coeffs[0] = gf->gf.alpha;
        coeffs[1] = gf->gf.beta;
        coeffs[2] = gf->gf.gamma;
        coeffs[3] = gf->gf.u;
        coeffs[4] = gf->gf.v;
        coeffs[5] = gf->gf.c.real();
        coeffs[6] = gf->gf.c.imag();
        coeffs[7] = gf->gf.hbar;
        return QHJ_OK;
    });
}

QHJ_API qhj_status qhj_generating_type(const qhj_generating_function* gf,
                                       int* type) {
    return guarded([&]() -> qhj_status {
        if (gf == nullptr)
            throw qhj::InvalidArgumentError("generating function is null");
        if (type == nullptr)
            throw qhj::InvalidArgumentError("type pointer is null");
        *type = static_cast<int>(gf->gf.type);
        return QHJ_OK;
    });
}

QHJ_API void qhj_generating_free(qhj_generating_function* gf) { delete gf; }

QHJ_API qhj_status qhj_evolve_gaussian(const char* potential_json, double hbar,
                                       double q_min, double q_max, size_t n,
                                       double center_q, double center_p,
                                       double width, double t, double* out_re,
                                       double* out_im) {
    return guarded([&]() -> qhj_status {
        if (out_re == nullptr || out_im == nullptr)
            throw qhj::InvalidArgumentError("output pointers are null");
        qhj::io::ordered_json spec = parse_json_text(potential_json, "potential");
        qhj::Potential pot = qhj::potential_from_json(spec);
        qhj::Grid1D grid(q_min, q_max, n);
        qhj::WaveFunction psi =
            qhj::make_gaussian(grid, center_q, center_p, width, hbar);
        psi = qhj::evolve_quadratic(pot, psi, t);
        for (size_t i = 0; i < n; ++i) {
            out_re[i] = psi[i].real();
            out_im[i] = psi[i].imag();
        }
        return QHJ_OK;
    });
}

}  // extern "C"
