#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qrotor/flux.hpp"
#include "qrotor/rotor_state.hpp"

namespace qrotor {

/// A lattice point in time, t = j * n' * T0. There is no continuous-time
/// entry point: evolution exists only at these instants.
class QuantizedTime {
public:
    QuantizedTime(std::int64_t step, std::int64_t dilation, int dim);

    std::int64_t step() const noexcept { return step_; }
    std::int64_t dilation() const noexcept { return dilation_; }
    int dim() const noexcept { return dim_; }

    /// Number of bare time quanta elapsed, j * n'.
    std::int64_t quanta() const noexcept { return step_ * dilation_; }

    /// Dimensionless time tau = 2 pi j n' / D.
    double tau() const noexcept;

private:
    std::int64_t step_;
    std::int64_t dilation_;
    int dim_;
};

/// Mass, ring radius and reduced Planck constant in SI units.
struct PhysicalScale {
    double mass = 1.0;
    double radius = 1.0;
    double hbar = 1.0;

    static PhysicalScale natural() { return {}; }
};

/// T0 = 4 pi M R^2 / ((2l+1) hbar).
double time_quantum(int l, const PhysicalScale& scale);

/// Full revival time D * T0 = 4 pi M R^2 / hbar.
double revival_time(const PhysicalScale& scale);

double tau_of(const QuantizedTime& qt);

/// c_k -> exp(-i tau k^2) c_k.
RotorState free_evolve(const RotorState& state, const QuantizedTime& qt);

/// c_k -> exp(-i tau (k - alpha)^2) c_k, with the phase argument reduced exactly.
RotorState flux_evolve(const RotorState& state, const QuantizedTime& qt, const FluxParameter& alpha);

/// |<initial|U(t) initial>|^2; free evolution when alpha is empty.
double autocorrelation(const RotorState& initial, const QuantizedTime& qt,
                       const std::optional<FluxParameter>& alpha = std::nullopt);

/// Autocorrelation distance from 1 under which a step counts as a full revival.
inline constexpr double kRevivalEpsilon = 1e-9;

struct RevivalSample {
    std::int64_t step;
    double autocorrelation;
};

struct RevivalScan {
    std::vector<RevivalSample> samples;   // j = 0..j_max
    std::optional<std::int64_t> revival_step;
};

RevivalScan revival_scan(const RotorState& initial, std::int64_t j_max,
                         const std::optional<FluxParameter>& alpha = std::nullopt,
                         std::int64_t dilation = 1);

struct FractionalRevival {
    double fidelity = 0.0;
    double phase = 0.0;
};

/// Best overlap of the j-step free evolution with the two-packet model
/// (|psi> + e^{i phi} |psi rotated by pi>) / norm, maximized over phi.
FractionalRevival fractional_revival_fidelity(const RotorState& initial, std::int64_t step);

/// e_m = (m - alpha)^2 in units of hbar^2 / (2 M R^2), m = -l..l.
std::vector<Rational> flux_spectrum(int l, const FluxParameter& alpha);

namespace detail {
/// Off-lattice evolution exp(-i tau k^2); test oracle use only.
RotorState evolve_continuous(const RotorState& state, double tau);
}  // namespace detail

}  // namespace qrotor
