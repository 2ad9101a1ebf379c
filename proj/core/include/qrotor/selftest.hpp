#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qrotor {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Fast invariant sweep over small dimensions: unitarity, Wigner marginals and
/// sign relations, shear equivalence, revival period, and the flux table.
std::vector<CheckResult> run_selftest(std::uint64_t seed);

}  // namespace qrotor
