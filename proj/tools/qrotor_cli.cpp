// qrotor: command-line front end for the quantized rotor library.
//
// Exit codes: 0 success, 1 usage, 2 config error, 3 admissibility error,
// 4 internal consistency failure.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qrotor/config.hpp"
#include "qrotor/errors.hpp"
#include "qrotor/evolution.hpp"
#include "qrotor/flux.hpp"
#include "qrotor/io.hpp"
#include "qrotor/run.hpp"
#include "qrotor/selftest.hpp"

namespace {

using Json = nlohmann::json;

enum ExitCode : int { kOk = 0, kUsage = 1, kConfig = 2, kAdmissibility = 3, kConsistency = 4 };

struct GlobalOptions {
    std::string config_path;
    std::string out_dir;
    bool natural_units = false;
    std::optional<double> mass;
    std::optional<double> radius;
    std::optional<double> hbar;
};

struct RunOverrides {
    std::optional<int> l;
    std::string state;
    std::string alpha;
    std::string dilation;
    std::string steps;
    std::optional<std::uint64_t> seed;
};

Json load_config_document(const GlobalOptions& global) {
    if (global.config_path.empty()) return Json::object();
    std::ifstream in(global.config_path);
    if (!in) throw qrotor::ConfigError("--config", "cannot read '" + global.config_path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw qrotor::ConfigError("<document>", std::string("invalid JSON: ") + e.what());
    }
}

// "momentum:0", "angle:2", "gaussian:<center>,<sigma>", "random".
Json parse_state_flag(const std::string& text) {
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    try {
        if (kind == "momentum") return {{"kind", "momentum"}, {"m", arg.empty() ? 0 : std::stoi(arg)}};
        if (kind == "angle") return {{"kind", "angle"}, {"n", arg.empty() ? 0 : std::stoi(arg)}};
        if (kind == "random") return {{"kind", "random"}};
        if (kind == "gaussian") {
            Json node = {{"kind", "gaussian"}};
            if (!arg.empty()) {
                const auto comma = arg.find(',');
                node["center"] = std::stod(arg.substr(0, comma));
                if (comma != std::string::npos) node["sigma"] = std::stod(arg.substr(comma + 1));
            }
            return node;
        }
    } catch (const std::exception&) {
        throw qrotor::ConfigError("--state", "malformed argument '" + text + "'");
    }
    throw qrotor::ConfigError("--state", "unknown kind '" + kind + "'");
}

Json parse_steps_flag(const std::string& text) {
    try {
        const auto colon = text.find(':');
        if (colon == std::string::npos) return {{"first", 0}, {"last", std::stoll(text)}};
        return {{"first", std::stoll(text.substr(0, colon))}, {"last", std::stoll(text.substr(colon + 1))}};
    } catch (const std::exception&) {
        throw qrotor::ConfigError("--steps", "expected J or FIRST:LAST, got '" + text + "'");
    }
}

qrotor::RunConfig build_config(const GlobalOptions& global, const RunOverrides& overrides,
                               const std::vector<std::string>& forced_outputs) {
    Json doc = load_config_document(global);
    if (!doc.is_object()) throw qrotor::ConfigError("<document>", "expected a JSON object");
    if (overrides.l) doc["l"] = *overrides.l;
    if (!doc.contains("l")) doc["l"] = 1;
    if (!overrides.state.empty()) doc["initial_state"] = parse_state_flag(overrides.state);
    if (!doc.contains("initial_state")) doc["initial_state"] = {{"kind", "angle"}, {"n", 0}};
    if (!overrides.alpha.empty()) doc["alpha"] = overrides.alpha;
    if (!overrides.dilation.empty()) {
        if (overrides.dilation == "paper" || overrides.dilation == "minimal") {
            doc["dilation"] = overrides.dilation;
        } else {
            try {
                doc["dilation"] = std::stoll(overrides.dilation);
            } catch (const std::exception&) {
                throw qrotor::ConfigError("--dilation", "expected an integer, 'paper' or 'minimal'");
            }
        }
    }
    if (!overrides.steps.empty()) doc["steps"] = parse_steps_flag(overrides.steps);
    if (overrides.seed) doc["seed"] = *overrides.seed;
    if (!forced_outputs.empty()) doc["outputs"] = forced_outputs;

    if (global.mass || global.radius || global.hbar) {
        if (global.natural_units) throw qrotor::ConfigError("--natural-units", "conflicts with explicit units");
        doc.erase("natural_units");
        Json units = doc.value("units", Json::object());
        if (global.mass) units["mass"] = *global.mass;
        if (global.radius) units["radius"] = *global.radius;
        if (global.hbar) units["hbar"] = *global.hbar;
        doc["units"] = units;
    } else if (global.natural_units) {
        doc.erase("units");
        doc.erase("natural_units");
    }

    if (!global.out_dir.empty()) {
        doc["output_dir"] = global.out_dir;
    } else if (const char* env = std::getenv("QROTOR_OUT_DIR"); env && *env) {
        doc["output_dir"] = env;
    }
    return qrotor::parse_config(doc.dump());
}

void print_files(const qrotor::RunResult& result) {
    for (const auto& path : result.files) std::cout << "wrote " << path.generic_string() << '\n';
}

int cmd_run(const GlobalOptions& global, const RunOverrides& overrides, std::vector<std::string> outputs) {
    const auto config = build_config(global, overrides, outputs);
    print_files(qrotor::run(config));
    return kOk;
}

int cmd_wigner(const GlobalOptions& global, const RunOverrides& overrides) {
    auto config = build_config(global, overrides, {});
    std::set<qrotor::Output> grids;
    for (const auto output : {qrotor::Output::Wigner, qrotor::Output::Representative, qrotor::Output::Marginals}) {
        if (config.outputs.contains(output)) grids.insert(output);
    }
    if (grids.empty() || global.config_path.empty()) {
        grids = {qrotor::Output::Wigner, qrotor::Output::Representative, qrotor::Output::Marginals};
    }
    config.outputs = grids;
    print_files(qrotor::run(config));
    return kOk;
}

int cmd_revival(const GlobalOptions& global, const RunOverrides& overrides) {
    const auto config = build_config(global, overrides, {"revival_scan"});
    const auto result = qrotor::run(config);
    print_files(result);
    std::cout << "D: " << config.dim() << '\n';
    std::cout << "time quantum T0: " << qrotor::io::format_double(qrotor::time_quantum(config.l, config.scale))
              << '\n';
    if (result.revival_step) {
        std::cout << "revival step: " << *result.revival_step << '\n';
        std::cout << "t_rev: " << qrotor::io::format_double(*result.revival_time) << '\n';
    } else {
        std::cout << "revival step: none up to j=" << config.last_step << '\n';
    }
    std::cout << "4 pi M R^2 / hbar: " << qrotor::io::format_double(qrotor::revival_time(config.scale)) << '\n';
    return kOk;
}

int cmd_map_compare(const GlobalOptions& global, const RunOverrides& overrides) {
    const auto config = build_config(global, overrides, {"map_compare"});
    const auto result = qrotor::run(config);
    print_files(result);
    std::cout << "max deviation: " << qrotor::io::format_double(result.max_map_deviation.value_or(0.0)) << '\n';
    return kOk;
}

int cmd_flux_check(const GlobalOptions& global, std::vector<std::string> values, const std::string& policy_name) {
    if (values.empty()) values = {"0/1", "1/4", "1/2", "3/4"};
    qrotor::DilationPolicy policy = qrotor::DilationPolicy::Paper;
    if (policy_name == "minimal") {
        policy = qrotor::DilationPolicy::Minimal;
    } else if (policy_name != "paper") {
        throw qrotor::ConfigError("--policy", "expected 'paper' or 'minimal'");
    }

    std::vector<qrotor::AdmissibilityReport> reports;
    for (const auto& text : values) {
        try {
            reports.push_back(qrotor::admissibility_report(qrotor::parse_flux(text), policy));
        } catch (const qrotor::DomainError& e) {
            throw qrotor::ConfigError("alpha", e.what());
        }
    }

    std::cout << std::left << std::setw(10) << "alpha" << std::setw(12) << "4a integer" << std::setw(10)
              << "allowed" << std::setw(10) << "minimal" << std::setw(8) << "paper" << "winding\n";
    for (const auto& r : reports) {
        std::cout << std::left << std::setw(10) << r.alpha.str() << std::setw(12)
                  << (r.full_grid_ok_at_base ? "yes" : "no") << std::setw(10)
                  << (r.representative_ok_at_base ? "yes" : "no") << std::setw(10) << r.minimal_dilation
                  << std::setw(8) << r.paper_dilation << r.winding_number << '\n';
    }

    if (!global.out_dir.empty()) {
        std::filesystem::create_directories(global.out_dir);
        const auto path = std::filesystem::path(global.out_dir) / "flux_check.json";
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << "[\n";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            out << qrotor::io::admissibility_json(reports[i]) << (i + 1 < reports.size() ? ",\n" : "\n");
        }
        out << "]\n";
        std::cout << "wrote " << path.generic_string() << '\n';
    }
    return kOk;
}

int cmd_selftest(std::uint64_t seed) {
    bool all = true;
    for (const auto& check : qrotor::run_selftest(seed)) {
        std::cout << (check.passed ? "[PASS] " : "[FAIL] ") << check.name << ": " << check.detail << '\n';
        all = all && check.passed;
    }
    return all ? kOk : kConsistency;
}

void add_run_overrides(CLI::App* cmd, RunOverrides& overrides) {
    cmd->add_option("-l,--cutoff", overrides.l, "Angular momentum cutoff l (D = 2l+1)");
    cmd->add_option("--state", overrides.state, "momentum:M | angle:N | gaussian:CENTER,SIGMA | random");
    cmd->add_option("--alpha", overrides.alpha, "Flux in units of the flux quantum, m/n");
    cmd->add_option("--dilation", overrides.dilation, "Time-quantum multiplier: integer, 'paper' or 'minimal'");
    cmd->add_option("--steps", overrides.steps, "J_MAX or FIRST:LAST");
    cmd->add_option("--seed", overrides.seed, "Seed for random initial states");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantized-time rotor dynamics: Wigner lattices, revivals and flux admissibility"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--config", global.config_path, "JSON run configuration")->check(CLI::ExistingFile);
    app.add_option("--out", global.out_dir, "Output directory");
    app.add_flag("--natural-units", global.natural_units, "Use M = R = hbar = 1 (default)");
    app.add_option("--mass", global.mass, "Particle mass M (kg)");
    app.add_option("--radius", global.radius, "Ring radius R (m)");
    app.add_option("--hbar", global.hbar, "Reduced Planck constant (J s)");

    RunOverrides overrides;
    auto* evolve = app.add_subcommand("evolve", "Write evolved state snapshots");
    auto* wigner = app.add_subcommand("wigner", "Write Wigner, representative and marginal grids");
    auto* revival = app.add_subcommand("revival", "Autocorrelation scan and revival time");
    auto* map_compare = app.add_subcommand("map-compare", "Quantum vs twist-map transport deviation per step");
    auto* run_cmd = app.add_subcommand("run", "Execute every output listed in the config");
    for (auto* cmd : {evolve, wigner, revival, map_compare, run_cmd}) add_run_overrides(cmd, overrides);

    std::vector<std::string> flux_values;
    std::string policy = "paper";
    auto* flux_check = app.add_subcommand("flux-check", "Admissibility report for rational flux values");
    flux_check->add_option("alpha", flux_values, "Rationals m/n (default: 0/1 1/4 1/2 3/4)");
    flux_check->add_option("--policy", policy, "Winding-number policy: paper or minimal");

    std::uint64_t selftest_seed = 0;
    auto* selftest = app.add_subcommand("selftest", "Run the invariant suites");
    selftest->add_option("--seed", selftest_seed, "Seed for random states");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return kUsage;
    }

    try {
        if (evolve->parsed()) return cmd_run(global, overrides, {"states"});
        if (wigner->parsed()) return cmd_wigner(global, overrides);
        if (revival->parsed()) return cmd_revival(global, overrides);
        if (map_compare->parsed()) return cmd_map_compare(global, overrides);
        if (run_cmd->parsed()) return cmd_run(global, overrides, {});
        if (flux_check->parsed()) return cmd_flux_check(global, flux_values, policy);
        if (selftest->parsed()) return cmd_selftest(selftest_seed);
    } catch (const qrotor::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const qrotor::FluxNotAdmissible& e) {
        std::cerr << "admissibility error: " << e.what() << '\n';
        return kAdmissibility;
    } catch (const qrotor::ConsistencyError& e) {
        std::cerr << "consistency error: " << e.what() << '\n';
        return kConsistency;
    } catch (const qrotor::DomainError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    std::cerr << app.help();
    return kUsage;
}
