/* Command-line front end. Talks to the library exclusively through the C API
 * and formats the manifest produced by the scenario runner for the terminal. */

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qhj/qhj.h"

namespace {

/* Reads a whole file; returns false if it cannot be opened. */
bool read_file(const std::string& path, std::string* out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    *out = ss.str();
    return true;
}

/* Prints the per-check and artifact summary from a run manifest. Failures to
 * read or parse the manifest are reported but do not change the exit code:
 * the run result is already decided. */
void print_manifest_summary(const std::string& manifest_path) {
    std::string text;
    if (!read_file(manifest_path, &text)) {
        std::cerr << "warning: could not read " << manifest_path << "\n";
        return;
    }
    auto manifest = nlohmann::json::parse(text, nullptr, false);
    if (manifest.is_discarded()) {
        std::cerr << "warning: could not parse " << manifest_path << "\n";
        return;
    }
    for (const auto& check : manifest.value("checks", nlohmann::json::array())) {
        const bool passed = check.value("passed", false);
        std::printf("%s  %-28s value=%.6g  tolerance=%.6g\n",
                    passed ? "[PASS]" : "[FAIL]",
                    check.value("name", std::string("?")).c_str(),
                    check.value("value", 0.0), check.value("tolerance", 0.0));
    }
    for (const auto& art : manifest.value("artifacts", nlohmann::json::array())) {
        std::printf("wrote  %s  (%lld bytes, fnv1a64 %s)\n",
                    art.value("path", std::string("?")).c_str(),
                    static_cast<long long>(art.value("bytes", 0)),
                    art.value("fnv1a64", std::string("?")).c_str());
    }
    if (manifest.contains("error") && !manifest["error"].is_null()) {
        std::cerr << "error [" << manifest["error"].value("kind", std::string("?"))
                  << "]: " << manifest["error"].value("message", std::string())
                  << "\n";
    }
    std::printf("status: %s\n", manifest.value("status", std::string("?")).c_str());
}

int cmd_run(const std::string& config_path, const std::string& out_dir,
            long seed) {
    std::string config_text;
    if (!read_file(config_path, &config_text)) {
        std::cerr << "error: cannot read config file: " << config_path << "\n";
        return 1;
    }
    int exit_code = 3;
    qhj_status st =
        qhj_run_scenario(config_text.c_str(), out_dir.c_str(), seed, &exit_code);
    print_manifest_summary(out_dir + "/manifest.json");
    if (st != QHJ_OK && std::string(qhj_last_error()).empty() == false &&
        exit_code != 2) {
        std::cerr << "error: " << qhj_last_error() << "\n";
    }
    return exit_code;
}

int cmd_validate(const std::string& config_path) {
    std::string config_text;
    if (!read_file(config_path, &config_text)) {
        std::cerr << "error: cannot read config file: " << config_path << "\n";
        return 1;
    }
    qhj_status st = qhj_validate_config(config_text.c_str());
    if (st != QHJ_OK) {
        std::cerr << "invalid: " << qhj_last_error() << "\n";
        return 1;
    }
    std::printf("ok\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    int major = 0, minor = 0, patch = 0;
    qhj_version(&major, &minor, &patch);
    char version[32];
    std::snprintf(version, sizeof version, "%d.%d.%d", major, minor, patch);

    CLI::App app{"Quantum canonical-transformation scenario runner"};
    app.set_version_flag("--version", std::string(version));
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    long seed = 0;

    auto* run = app.add_subcommand(
        "run", "Execute a scenario config and write artifacts plus manifest");
    run->add_option("config", config_path, "Scenario configuration (JSON)")
        ->required();
    run->add_option("--out", out_dir, "Output directory (created if missing)")
        ->capture_default_str();
    run->add_option("--seed", seed, "Seed recorded in the manifest")
        ->capture_default_str();

    auto* validate = app.add_subcommand(
        "validate", "Check a scenario config without running it");
    validate->add_option("config", config_path, "Scenario configuration (JSON)")
        ->required();

    auto* list = app.add_subcommand("list-scenarios", "List scenario names");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) return cmd_run(config_path, out_dir, seed);
    if (validate->parsed()) return cmd_validate(config_path);
    if (list->parsed()) {
        std::printf("%s\n", qhj_list_scenarios());
        return 0;
    }
    return 0;
}
