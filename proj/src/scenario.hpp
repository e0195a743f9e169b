#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "io.hpp"
#include "potential.hpp"

namespace qhj {

struct CheckResult {
    std::string name;
    bool passed = false;
    double value = 0.0;
    double tolerance = 0.0;
};

struct ArtifactRecord {
    std::string path;  // relative to the output directory
    std::uint64_t bytes = 0;
    std::string fnv1a64;
};

struct ScenarioResult {
    /* 0 all checks passed, 1 configuration error, 2 checks failed,
     * 3 numerical or I/O failure during the run. */
    int exit_code = 0;
    std::string status;  // "ok", "checks-failed", "error"
    std::string error_kind;
    std::string error_message;
    int error_code = 0;  // ErrorKind value when status == "error"
    std::vector<CheckResult> checks;
    std::vector<ArtifactRecord> artifacts;
    std::string manifest_path;
};

const std::vector<std::string>& scenario_names();

/* Parses a potential description object, e.g. {"kind":"harmonic","omega":2.0}.
 * Throws ConfigError naming the offending field. */
Potential potential_from_json(const io::ordered_json& spec);

/* Structural validation only: known scenario, required fields present with
 * the right types and ranges, no unknown fields. Throws ConfigError naming
 * the offending field. */
void validate_config(const io::ordered_json& config);

/* Runs the configured scenario, writing artifacts and manifest.json into
 * out_dir. The manifest is written even when the run fails. All pipelines are
 * deterministic; the seed is only recorded. */
ScenarioResult run_scenario(const io::ordered_json& config, const std::string& out_dir,
                            long seed);

}  // namespace qhj
