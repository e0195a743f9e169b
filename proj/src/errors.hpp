#pragma once

#include <stdexcept>
#include <string>

namespace qhj {

/* Error kinds mirror the status codes of the C API, so exceptions thrown
 * anywhere in the core can be mapped to a stable integer at the boundary. */
enum class ErrorKind {
    invalid_argument = 1,
    grid_mismatch,
    domain_truncation,
    caustic,
    no_convergence,
    degenerate_quadratic,
    unsupported_potential,
    aliasing,
    mass_leakage,
    convergence_gate,
    integration_failure,
    config_error,
    io_error,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

#define QHJ_DEFINE_ERROR(Name, Kind)                                         \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& msg) : Error(ErrorKind::Kind, msg) {} \
    }

QHJ_DEFINE_ERROR(InvalidArgumentError, invalid_argument);
QHJ_DEFINE_ERROR(GridMismatchError, grid_mismatch);
QHJ_DEFINE_ERROR(DomainTruncationError, domain_truncation);
QHJ_DEFINE_ERROR(CausticError, caustic);
QHJ_DEFINE_ERROR(NoConvergenceError, no_convergence);
QHJ_DEFINE_ERROR(DegenerateQuadraticError, degenerate_quadratic);
QHJ_DEFINE_ERROR(UnsupportedPotentialError, unsupported_potential);
QHJ_DEFINE_ERROR(AliasingError, aliasing);
QHJ_DEFINE_ERROR(MassLeakageError, mass_leakage);
QHJ_DEFINE_ERROR(ConvergenceGateError, convergence_gate);
QHJ_DEFINE_ERROR(IntegrationError, integration_failure);
QHJ_DEFINE_ERROR(ConfigError, config_error);
QHJ_DEFINE_ERROR(IoError, io_error);

#undef QHJ_DEFINE_ERROR

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::invalid_argument: return "invalid_argument";
        case ErrorKind::grid_mismatch: return "grid_mismatch";
        case ErrorKind::domain_truncation: return "domain_truncation";
        case ErrorKind::caustic: return "caustic";
        case ErrorKind::no_convergence: return "no_convergence";
        case ErrorKind::degenerate_quadratic: return "degenerate_quadratic";
        case ErrorKind::unsupported_potential: return "unsupported_potential";
        case ErrorKind::aliasing: return "aliasing";
        case ErrorKind::mass_leakage: return "mass_leakage";
        case ErrorKind::convergence_gate: return "convergence_gate";
        case ErrorKind::integration_failure: return "integration_failure";
        case ErrorKind::config_error: return "config_error";
        case ErrorKind::io_error: return "io_error";
    }
    return "unknown";
}

}  // namespace qhj
