#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "qrotor/config.hpp"

namespace qrotor {

struct RunResult {
    /// Files written, in the order they were produced.
    std::vector<std::filesystem::path> files;
    std::optional<std::int64_t> revival_step;
    /// Revival time in physical units, j_rev * n' * T0, when a revival was found.
    std::optional<double> revival_time;
    std::optional<double> max_map_deviation;
};

/// Writes every requested output for steps first..last into config.output_dir.
/// File names: state_j<j>.csv, wigner_j<j>.csv (+ .pgm, .pgm.txt), representative_j<j>.csv,
/// marginals_j<j>.csv, revival_scan.csv, revival_summary.json, admissibility.json,
/// map_compare.csv.
RunResult run(const RunConfig& config);

}  // namespace qrotor
