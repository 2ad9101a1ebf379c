#include "qrotor/config.hpp"

#include <algorithm>
#include <array>
#include <span>
#include <random>
#include <utility>

#include "json.hpp"

#include "qrotor/errors.hpp"

namespace qrotor {

namespace {

using Json = nlohmann::json;

constexpr std::array<std::pair<Output, std::string_view>, 7> kOutputNames{{
    {Output::States, "states"},
    {Output::Wigner, "wigner"},
    {Output::Representative, "representative"},
    {Output::Marginals, "marginals"},
    {Output::RevivalScan, "revival_scan"},
    {Output::Admissibility, "admissibility"},
    {Output::MapCompare, "map_compare"},
}};

constexpr std::array<std::string_view, 11> kTopLevelKeys{
    "l", "initial_state", "alpha", "dilation", "steps", "outputs",
    "graymap", "output_dir", "seed", "units", "natural_units"};

void reject_unknown_keys(const Json& object, std::string_view path, std::span<const std::string_view> allowed) {
    for (const auto& [key, value] : object.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw ConfigError(std::string(path.empty() ? "" : std::string(path) + ".") + key, "unknown field");
        }
    }
}

template <typename T>
T get_integer(const Json& value, const std::string& path) {
    if (!value.is_number_integer()) throw ConfigError(path, "expected an integer");
    return value.get<T>();
}

double get_number(const Json& value, const std::string& path) {
    if (!value.is_number()) throw ConfigError(path, "expected a number");
    return value.get<double>();
}

InitialState parse_initial_state(const Json& node, int l) {
    const std::string path = "initial_state";
    if (!node.is_object()) throw ConfigError(path, "expected an object with a \"kind\" field");
    if (!node.contains("kind") || !node["kind"].is_string()) throw ConfigError(path + ".kind", "missing or not a string");
    const auto kind = node["kind"].get<std::string>();
    if (kind == "momentum") {
        static constexpr std::array<std::string_view, 2> keys{"kind", "m"};
        reject_unknown_keys(node, path, keys);
        const int m = node.contains("m") ? get_integer<int>(node["m"], path + ".m") : 0;
        if (m < -l || m > l) {
            throw ConfigError(path + ".m", "must lie in [" + std::to_string(-l) + ", " + std::to_string(l) + "]");
        }
        return MomentumInit{m};
    }
    if (kind == "angle") {
        static constexpr std::array<std::string_view, 2> keys{"kind", "n"};
        reject_unknown_keys(node, path, keys);
        const int n = node.contains("n") ? get_integer<int>(node["n"], path + ".n") : 0;
        if (n < 0 || n > 2 * l) throw ConfigError(path + ".n", "must lie in [0, " + std::to_string(2 * l) + "]");
        return AngleInit{n};
    }
    if (kind == "gaussian") {
        static constexpr std::array<std::string_view, 3> keys{"kind", "center", "sigma"};
        reject_unknown_keys(node, path, keys);
        GaussianInit init;
        if (node.contains("center")) init.center = get_number(node["center"], path + ".center");
        if (node.contains("sigma")) init.sigma = get_number(node["sigma"], path + ".sigma");
        if (!(init.sigma > 0.0)) throw ConfigError(path + ".sigma", "must be positive");
        return init;
    }
    if (kind == "random") {
        static constexpr std::array<std::string_view, 1> keys{"kind"};
        reject_unknown_keys(node, path, keys);
        return RandomInit{};
    }
    throw ConfigError(path + ".kind", "unknown kind '" + kind + "' (momentum, angle, gaussian, random)");
}

FluxParameter parse_alpha(const Json& node) {
    try {
        if (node.is_string()) return parse_flux(node.get<std::string>());
        if (node.is_number_integer()) return canonicalize(node.get<std::int64_t>(), 1);
        if (node.is_object()) {
            static constexpr std::array<std::string_view, 2> keys{"num", "den"};
            reject_unknown_keys(node, "alpha", keys);
            if (!node.contains("num") || !node.contains("den")) throw ConfigError("alpha", "needs num and den");
            return canonicalize(get_integer<std::int64_t>(node["num"], "alpha.num"),
                                get_integer<std::int64_t>(node["den"], "alpha.den"));
        }
    } catch (const DomainError& e) {
        throw ConfigError("alpha", e.what());
    }
    throw ConfigError("alpha", "expected \"m/n\", an integer, or {num, den}");
}

DilationSpec parse_dilation(const Json& node) {
    if (node.is_string()) {
        const auto keyword = node.get<std::string>();
        if (keyword == "paper") return DilationPolicy::Paper;
        if (keyword == "minimal") return DilationPolicy::Minimal;
        throw ConfigError("dilation", "unknown keyword '" + keyword + "' (paper, minimal)");
    }
    const auto value = get_integer<std::int64_t>(node, "dilation");
    if (value < 1) throw ConfigError("dilation", "must be >= 1");
    return value;
}

PhysicalScale parse_units(const Json& node) {
    if (!node.is_object()) throw ConfigError("units", "expected an object");
    static constexpr std::array<std::string_view, 3> keys{"mass", "radius", "hbar"};
    reject_unknown_keys(node, "units", keys);
    PhysicalScale scale;
    if (node.contains("mass")) scale.mass = get_number(node["mass"], "units.mass");
    if (node.contains("radius")) scale.radius = get_number(node["radius"], "units.radius");
    if (node.contains("hbar")) scale.hbar = get_number(node["hbar"], "units.hbar");
    return scale;
}

Json initial_state_json(const InitialState& init) {
    return std::visit(
        [](const auto& v) -> Json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, MomentumInit>) return {{"kind", "momentum"}, {"m", v.m}};
            if constexpr (std::is_same_v<T, AngleInit>) return {{"kind", "angle"}, {"n", v.n}};
            if constexpr (std::is_same_v<T, GaussianInit>) {
                return {{"kind", "gaussian"}, {"center", v.center}, {"sigma", v.sigma}};
            }
            if constexpr (std::is_same_v<T, RandomInit>) return {{"kind", "random"}};
        },
        init);
}

}  // namespace

std::string_view to_string(Output output) {
    for (const auto& [value, name] : kOutputNames) {
        if (value == output) return name;
    }
    return "unknown";
}

std::int64_t resolve_config_dilation(const FluxParameter& alpha, const DilationSpec& spec) {
    const std::int64_t dilation = std::holds_alternative<DilationPolicy>(spec)
                                      ? resolve_dilation(alpha, std::get<DilationPolicy>(spec))
                                      : std::get<std::int64_t>(spec);
    if (!representative_admissible(alpha, dilation)) {
        throw FluxNotAdmissible("alpha=" + alpha.str() + " with dilation " + std::to_string(dilation) +
                                " does not leave the representative Wigner lattice invariant "
                                "(2 n' alpha must be an integer; minimal admissible dilation is " +
                                std::to_string(minimal_dilation(alpha)) + ")");
    }
    return dilation;
}

void validate(RunConfig& config) {
    if (config.l < 0) throw ConfigError("l", "must be non-negative");
    if (const auto* init = std::get_if<MomentumInit>(&config.initial_state);
        init && (init->m < -config.l || init->m > config.l)) {
        throw ConfigError("initial_state.m", "outside [-l, l]");
    }
    if (const auto* init = std::get_if<AngleInit>(&config.initial_state);
        init && (init->n < 0 || init->n > 2 * config.l)) {
        throw ConfigError("initial_state.n", "outside [0, 2l]");
    }
    if (const auto* init = std::get_if<GaussianInit>(&config.initial_state); init && !(init->sigma > 0.0)) {
        throw ConfigError("initial_state.sigma", "must be positive");
    }
    if (config.first_step < 0) throw ConfigError("steps.first", "must be non-negative");
    if (config.last_step < config.first_step) throw ConfigError("steps.last", "must be >= steps.first");
    if (!(config.scale.mass > 0.0)) throw ConfigError("units.mass", "must be positive");
    if (!(config.scale.radius > 0.0)) throw ConfigError("units.radius", "must be positive");
    if (!(config.scale.hbar > 0.0)) throw ConfigError("units.hbar", "must be positive");
    if (config.outputs.contains(Output::MapCompare) && !config.alpha.is_zero()) {
        throw ConfigError("outputs", "map_compare is only defined for alpha = 0");
    }
    config.dilation = resolve_config_dilation(config.alpha, config.dilation_spec);
}

RunConfig parse_config(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ConfigError("<document>", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("<document>", "expected a JSON object");
    reject_unknown_keys(doc, "", kTopLevelKeys);

    RunConfig config;
    if (!doc.contains("l")) throw ConfigError("l", "required field missing");
    config.l = get_integer<int>(doc["l"], "l");
    if (config.l < 0) throw ConfigError("l", "must be non-negative");

    if (!doc.contains("initial_state")) throw ConfigError("initial_state", "required field missing");
    config.initial_state = parse_initial_state(doc["initial_state"], config.l);

    if (doc.contains("alpha")) config.alpha = parse_alpha(doc["alpha"]);
    if (doc.contains("dilation")) config.dilation_spec = parse_dilation(doc["dilation"]);

    config.last_step = config.dim();
    if (doc.contains("steps")) {
        const auto& steps = doc["steps"];
        if (steps.is_number_integer()) {
            config.last_step = get_integer<std::int64_t>(steps, "steps");
        } else if (steps.is_object()) {
            static constexpr std::array<std::string_view, 2> keys{"first", "last"};
            reject_unknown_keys(steps, "steps", keys);
            if (steps.contains("first")) config.first_step = get_integer<std::int64_t>(steps["first"], "steps.first");
            if (steps.contains("last")) config.last_step = get_integer<std::int64_t>(steps["last"], "steps.last");
        } else {
            throw ConfigError("steps", "expected an integer j_max or {first, last}");
        }
    }

    if (doc.contains("outputs")) {
        const auto& outputs = doc["outputs"];
        if (!outputs.is_array()) throw ConfigError("outputs", "expected an array");
        config.outputs.clear();
        for (std::size_t i = 0; i < outputs.size(); ++i) {
            const std::string path = "outputs[" + std::to_string(i) + "]";
            if (!outputs[i].is_string()) throw ConfigError(path, "expected a string");
            const auto name = outputs[i].get<std::string>();
            const auto it = std::find_if(kOutputNames.begin(), kOutputNames.end(),
                                         [&](const auto& entry) { return entry.second == name; });
            if (it == kOutputNames.end()) throw ConfigError(path, "unknown output '" + name + "'");
            config.outputs.insert(it->first);
        }
    }

    if (doc.contains("graymap")) {
        if (!doc["graymap"].is_boolean()) throw ConfigError("graymap", "expected a boolean");
        config.graymap = doc["graymap"].get<bool>();
    }
    if (doc.contains("output_dir")) {
        if (!doc["output_dir"].is_string()) throw ConfigError("output_dir", "expected a string");
        config.output_dir = doc["output_dir"].get<std::string>();
    }
    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned()) throw ConfigError("seed", "expected a non-negative integer");
        config.seed = doc["seed"].get<std::uint64_t>();
    }
    if (doc.contains("natural_units")) {
        if (!doc["natural_units"].is_boolean()) throw ConfigError("natural_units", "expected a boolean");
        if (doc["natural_units"].get<bool>() && doc.contains("units")) {
            throw ConfigError("units", "conflicts with natural_units = true");
        }
    }
    if (doc.contains("units")) config.scale = parse_units(doc["units"]);

    validate(config);
    return config;
}

std::string to_json(const RunConfig& config) {
    nlohmann::ordered_json doc;
    doc["l"] = config.l;
    doc["initial_state"] = initial_state_json(config.initial_state);
    doc["alpha"] = config.alpha.str();
    if (std::holds_alternative<DilationPolicy>(config.dilation_spec)) {
        doc["dilation"] = std::get<DilationPolicy>(config.dilation_spec) == DilationPolicy::Paper ? "paper" : "minimal";
    } else {
        doc["dilation"] = std::get<std::int64_t>(config.dilation_spec);
    }
    doc["steps"] = {{"first", config.first_step}, {"last", config.last_step}};
    auto outputs = nlohmann::ordered_json::array();
    for (const auto output : config.outputs) outputs.push_back(std::string(to_string(output)));
    doc["outputs"] = outputs;
    doc["graymap"] = config.graymap;
    doc["output_dir"] = config.output_dir.generic_string();
    doc["seed"] = config.seed;
    doc["units"] = {{"mass", config.scale.mass}, {"radius", config.scale.radius}, {"hbar", config.scale.hbar}};
    return doc.dump(2) + "\n";
}

RotorState make_initial_state(const RunConfig& config) {
    return std::visit(
        [&](const auto& init) -> RotorState {
            using T = std::decay_t<decltype(init)>;
            if constexpr (std::is_same_v<T, MomentumInit>) return make_momentum_state(config.l, init.m);
            if constexpr (std::is_same_v<T, AngleInit>) return make_angle_state(config.l, init.n);
            if constexpr (std::is_same_v<T, GaussianInit>) {
                return make_gaussian_packet(config.l, init.center, init.sigma);
            }
            if constexpr (std::is_same_v<T, RandomInit>) {
                std::mt19937_64 rng(config.seed);
                return make_random_state(config.l, rng);
            }
        },
        config.initial_state);
}

}  // namespace qrotor
