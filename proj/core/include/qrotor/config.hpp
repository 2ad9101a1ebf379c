#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "qrotor/evolution.hpp"
#include "qrotor/flux.hpp"
#include "qrotor/rotor_state.hpp"

namespace qrotor {

/// Schema violation in a run configuration; `field()` is the dotted path.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

struct MomentumInit {
    int m = 0;
    friend bool operator==(const MomentumInit&, const MomentumInit&) = default;
};

struct AngleInit {
    int n = 0;
    friend bool operator==(const AngleInit&, const AngleInit&) = default;
};

struct GaussianInit {
    double center = 0.0;
    double sigma = 0.3;
    friend bool operator==(const GaussianInit&, const GaussianInit&) = default;
};

/// Amplitudes drawn from the run's seed.
struct RandomInit {
    friend bool operator==(const RandomInit&, const RandomInit&) = default;
};

using InitialState = std::variant<MomentumInit, AngleInit, GaussianInit, RandomInit>;

enum class Output { States, Wigner, Representative, Marginals, RevivalScan, Admissibility, MapCompare };

std::string_view to_string(Output output);

/// Dilation as written in the config: a number, or a policy keyword.
using DilationSpec = std::variant<std::int64_t, DilationPolicy>;

struct RunConfig {
    int l = 0;
    InitialState initial_state = MomentumInit{};
    FluxParameter alpha;
    DilationSpec dilation_spec = DilationPolicy::Paper;
    /// Resolved time-quantum multiplier n'.
    std::int64_t dilation = 1;
    std::int64_t first_step = 0;
    std::int64_t last_step = 0;
    std::set<Output> outputs{Output::Wigner};
    bool graymap = false;
    std::filesystem::path output_dir = "qrotor_out";
    std::uint64_t seed = 0;
    PhysicalScale scale;

    int dim() const noexcept { return 2 * l + 1; }
};

/// Parses and validates a JSON run configuration, applying defaults.
/// Throws ConfigError on schema violations and FluxNotAdmissible when the
/// (alpha, dilation) pair does not keep the representative lattice invariant.
RunConfig parse_config(std::string_view text);

/// Canonical JSON for a config; parse_config(to_json(c)) reproduces c.
std::string to_json(const RunConfig& config);

/// Resolves dilation_spec against alpha and checks representative admissibility.
std::int64_t resolve_config_dilation(const FluxParameter& alpha, const DilationSpec& spec);

/// Re-validates fields that callers may have edited after parsing.
void validate(RunConfig& config);

RotorState make_initial_state(const RunConfig& config);

}  // namespace qrotor
