#include "qrotor/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qrotor/classical_map.hpp"
#include "qrotor/evolution.hpp"
#include "qrotor/flux.hpp"
#include "qrotor/io.hpp"
#include "qrotor/wigner.hpp"

namespace qrotor {

namespace {

CheckResult check(std::string name, double observed, double bound) {
    const bool ok = observed <= bound;
    return {std::move(name), ok, "max " + io::format_double(observed) + " (bound " + io::format_double(bound) + ")"};
}

}  // namespace

std::vector<CheckResult> run_selftest(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<CheckResult> results;

    double unitarity = 0.0;
    double wigner_sum = 0.0;
    double momentum_marginal = 0.0;
    double angle_marginal = 0.0;
    double sign_relation = 0.0;
    double shear = 0.0;
    double classical = 0.0;
    for (int l = 1; l <= 5; ++l) {
        const int d = 2 * l + 1;
        for (int trial = 0; trial < 5; ++trial) {
            const RotorState state = make_random_state(l, rng);
            for (std::int64_t j = 0; j <= d; ++j) {
                const QuantizedTime qt(j, 2, d);
                unitarity = std::max(unitarity, std::abs(flux_evolve(state, qt, canonicalize(1, 4)).norm() - 1.0));
                shear = std::max(shear, verify_shear_equivalence(state, j, 1, FluxParameter{}));
                shear = std::max(shear, verify_shear_equivalence(state, j, 2, canonicalize(1, 4)));
                classical = std::max(classical, compare_quantum_classical(state, j));
            }
            const WignerGrid grid = build_wigner(state);
            const auto angles = to_angle_representation(state);
            wigner_sum = std::max(wigner_sum, std::abs(grid.total() - 1.0));
            for (long r = grid.r_min(); r <= grid.r_max(); ++r) {
                const double expected = r % 2 == 0 ? std::norm(state.amplitude(r / 2)) : 0.0;
                momentum_marginal = std::max(momentum_marginal, std::abs(marginal_momentum(grid, r) - expected));
            }
            for (long s = 0; s < grid.side(); ++s) {
                const double expected = s % 2 == 0 ? std::norm(angles.values[s / 2]) : 0.0;
                angle_marginal = std::max(angle_marginal, std::abs(marginal_angle(grid, s) - expected));
                for (long r = grid.r_min(); r <= grid.r_max(); ++r) {
                    const double sr = (r % 2 == 0) ? 1.0 : -1.0;
                    const double ss = (s % 2 == 0) ? 1.0 : -1.0;
                    sign_relation = std::max(sign_relation, std::abs(grid.at(s + d, r) - sr * grid.at(s, r)));
                    sign_relation = std::max(sign_relation, std::abs(grid.at(s, r + d) - ss * grid.at(s, r)));
                }
            }
        }
    }
    results.push_back(check("evolution is unitary", unitarity, 1e-12));
    results.push_back(check("Wigner total is one", wigner_sum, 1e-10));
    results.push_back(check("momentum marginal", momentum_marginal, 1e-10));
    results.push_back(check("angle marginal", angle_marginal, 1e-10));
    results.push_back(check("fourfold sign relations", sign_relation, 1e-12));
    results.push_back(check("shear transport equals evolution", shear, 1e-10));
    results.push_back(check("quantum equals twist-map transport", classical, 1e-10));

    bool revivals = true;
    for (int l = 1; l <= 10; ++l) {
        const RotorState state = make_random_state(l, rng);
        const auto scan = revival_scan(state, 2 * state.dim());
        revivals = revivals && scan.revival_step == state.dim() && map_period(state.dim()) == state.dim();
    }
    results.push_back({"revival step equals D and map period", revivals, revivals ? "D = 3..21" : "mismatch"});

    const bool table = representative_admissible(canonicalize(0, 1), 1) &&
                       !representative_admissible(canonicalize(1, 4), 1) &&
                       representative_admissible(canonicalize(1, 2), 1) &&
                       !representative_admissible(canonicalize(3, 4), 1);
    results.push_back({"flux admissibility table {0, 1/4, 1/2, 3/4}", table, table ? "yes, no, yes, no" : "mismatch"});
    return results;
}

}  // namespace qrotor
