#ifndef QHJ_H
#define QHJ_H

/* C interface to the canonical-transformation propagator library. All entry
 * points return a status code; on failure qhj_last_error() holds a message
 * for the calling thread. Pointers returned by the library stay valid until
 * the next call on the same thread unless documented otherwise. */

#include <stddef.h>

#if defined(QHJ_BUILD) && defined(__GNUC__)
#define QHJ_API __attribute__((visibility("default")))
#else
#define QHJ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qhj_status {
    QHJ_OK = 0,
    QHJ_ERR_INVALID_ARGUMENT = 1,
    QHJ_ERR_GRID_MISMATCH = 2,
    QHJ_ERR_DOMAIN_TRUNCATION = 3,
    QHJ_ERR_CAUSTIC = 4,
    QHJ_ERR_NO_CONVERGENCE = 5,
    QHJ_ERR_DEGENERATE_QUADRATIC = 6,
    QHJ_ERR_UNSUPPORTED_POTENTIAL = 7,
    QHJ_ERR_ALIASING = 8,
    QHJ_ERR_MASS_LEAKAGE = 9,
    QHJ_ERR_CONVERGENCE_GATE = 10,
    QHJ_ERR_INTEGRATION = 11,
    QHJ_ERR_CONFIG = 12,
    QHJ_ERR_IO = 13,
    QHJ_ERR_CHECKS_FAILED = 14,
    QHJ_ERR_UNKNOWN = 99
} qhj_status;

/* Generating-function argument pairs: 1 = (q,Q), 2 = (q,P), 3 = (p,Q),
 * 4 = (p,P). */
typedef enum qhj_gf_type {
    QHJ_GF_F1 = 1,
    QHJ_GF_F2 = 2,
    QHJ_GF_F3 = 3,
    QHJ_GF_F4 = 4
} qhj_gf_type;

QHJ_API void qhj_version(int* major, int* minor, int* patch);

/* Message describing the most recent failure on this thread; empty string
 * when the last call succeeded. */
QHJ_API const char* qhj_last_error(void);

/* Runs a scenario described by a JSON document (see the README for the
 * schema), writing artifacts and manifest.json under out_dir. exit_code
 * receives 0 (all checks passed), 1 (bad config), 2 (checks failed) or
 * 3 (numerical failure); the manifest is written in every case that reaches
 * the output directory. The seed is recorded in the manifest; all pipelines
 * are deterministic. */
QHJ_API qhj_status qhj_run_scenario(const char* config_json, const char* out_dir,
                                    long seed, int* exit_code);

/* Structural validation of a scenario configuration. */
QHJ_API qhj_status qhj_validate_config(const char* config_json);

/* Newline-separated scenario names; static storage. */
QHJ_API const char* qhj_list_scenarios(void);

typedef struct qhj_generating_function qhj_generating_function;

/* Closed-form generating function of the time evolution under a quadratic
 * potential, e.g. potential_json = {"kind":"harmonic","omega":1.0}. */
QHJ_API qhj_status qhj_closed_form_generating(const char* potential_json,
                                              int gf_type, double t, double hbar,
                                              qhj_generating_function** out);

/* Exact Fresnel-integral conversion to another argument pair. */
QHJ_API qhj_status qhj_convert_generating(const qhj_generating_function* gf,
                                          int target_type,
                                          qhj_generating_function** out);

/* coeffs[8] = { alpha, beta, gamma, u, v, c_re, c_im, hbar } for
 * S(x,y) = alpha x^2/2 + beta x y + gamma y^2/2 + u x + v y + c. */
QHJ_API qhj_status qhj_generating_coefficients(const qhj_generating_function* gf,
                                               double coeffs[8]);

QHJ_API qhj_status qhj_generating_type(const qhj_generating_function* gf, int* type);

QHJ_API void qhj_generating_free(qhj_generating_function* gf);

/* Evolves a normalized Gaussian packet under a quadratic potential for time t
 * on a uniform grid of n samples over [q_min, q_max], via composed
 * closed-form kernels. out_re and out_im must hold n doubles each. */
QHJ_API qhj_status qhj_evolve_gaussian(const char* potential_json, double hbar,
                                       double q_min, double q_max, size_t n,
                                       double center_q, double center_p,
                                       double width, double t, double* out_re,
                                       double* out_im);

#ifdef __cplusplus
}
#endif

#endif /* QHJ_H */
