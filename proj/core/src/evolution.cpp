#include "qrotor/evolution.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "qrotor/detail/phase.hpp"
#include "qrotor/errors.hpp"

namespace qrotor {

namespace {

void require_same_dim(const RotorState& state, const QuantizedTime& qt) {
    if (state.dim() != qt.dim()) throw DimensionMismatch(qt.dim(), state.dim());
}

// Applies angle_shift `times` times in one pass.
RotorState rotate(const RotorState& state, std::int64_t times) {
    const int l = state.cutoff();
    const int d = state.dim();
    std::vector<Complex> amps(d);
    for (int m = -l; m <= l; ++m) {
        amps[m + l] = detail::root_of_unity(-detail::mul_mod(m, times, d), d) * state.amplitude(m);
    }
    return RotorState(l, std::move(amps));
}

// Overlap squared of the normalized model (a + e^{i phi} b) with the target,
// given A = <a|e>, B = <b|e>, S = <a|b>.
double two_packet_overlap(Complex A, Complex B, Complex S, double phi) {
    const Complex rot = std::polar(1.0, phi);
    const double norm2 = 2.0 + 2.0 * std::real(rot * S);
    if (norm2 <= 1e-14) return 0.0;
    return std::norm(A + std::conj(rot) * B) / norm2;
}

FractionalRevival maximize_over_phase(Complex A, Complex B, Complex S) {
    constexpr int kGrid = 4096;
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    FractionalRevival best;
    int best_index = 0;
    for (int i = 0; i < kGrid; ++i) {
        const double phi = kTwoPi * i / kGrid;
        const double value = two_packet_overlap(A, B, S, phi);
        if (value > best.fidelity) {
            best = {value, phi};
            best_index = i;
        }
    }
    // Golden-section refinement inside the neighbouring grid cells.
    double lo = kTwoPi * (best_index - 1) / kGrid;
    double hi = kTwoPi * (best_index + 1) / kGrid;
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int iter = 0; iter < 60; ++iter) {
        const double x1 = hi - ratio * (hi - lo);
        const double x2 = lo + ratio * (hi - lo);
        if (two_packet_overlap(A, B, S, x1) < two_packet_overlap(A, B, S, x2)) {
            lo = x1;
        } else {
            hi = x2;
        }
    }
    const double phi = 0.5 * (lo + hi);
    const double value = two_packet_overlap(A, B, S, phi);
    if (value > best.fidelity) best = {value, phi};
    best.phase = std::fmod(best.phase + kTwoPi, kTwoPi);
    return best;
}

}  // namespace

QuantizedTime::QuantizedTime(std::int64_t step, std::int64_t dilation, int dim)
    : step_(step), dilation_(dilation), dim_(dim) {
    if (step < 0) throw DomainError("time step j must be non-negative, got " + std::to_string(step));
    if (dilation < 1) {
        throw DomainError("time-quantum dilation must be >= 1, got " + std::to_string(dilation));
    }
    if (dim < 1 || dim % 2 == 0) {
        throw DomainError("dimension must be odd and >= 1, got " + std::to_string(dim));
    }
}

double QuantizedTime::tau() const noexcept {
    return 2.0 * std::numbers::pi * static_cast<double>(quanta()) / dim_;
}

double time_quantum(int l, const PhysicalScale& scale) {
    if (l < 0) throw DomainError("angular momentum cutoff must be non-negative");
    return revival_time(scale) / (2 * l + 1);
}

double revival_time(const PhysicalScale& scale) {
    if (!(scale.mass > 0.0) || !(scale.radius > 0.0) || !(scale.hbar > 0.0)) {
        throw DomainError("mass, radius and hbar must all be strictly positive");
    }
    return 4.0 * std::numbers::pi * scale.mass * scale.radius * scale.radius / scale.hbar;
}

double tau_of(const QuantizedTime& qt) { return qt.tau(); }

RotorState free_evolve(const RotorState& state, const QuantizedTime& qt) {
    return flux_evolve(state, qt, FluxParameter{});
}

RotorState flux_evolve(const RotorState& state, const QuantizedTime& qt, const FluxParameter& alpha) {
    require_same_dim(state, qt);
    const int l = state.cutoff();
    const std::int64_t p = alpha.num();
    const std::int64_t q = alpha.den();
    // tau (k - p/q)^2 = 2 pi * quanta * (q k - p)^2 / (D q^2)
    const std::int64_t modulus = static_cast<std::int64_t>(state.dim()) * q * q;
    std::vector<Complex> amps(state.dim());
    for (int k = -l; k <= l; ++k) {
        const std::int64_t shifted = q * k - p;
        const std::int64_t square = detail::mul_mod(shifted, shifted, modulus);
        const std::int64_t numerator = detail::mul_mod(square, qt.quanta(), modulus);
        amps[k + l] = detail::root_of_unity(-numerator, modulus) * state.amplitude(k);
    }
    return RotorState(l, std::move(amps));
}

double autocorrelation(const RotorState& initial, const QuantizedTime& qt,
                       const std::optional<FluxParameter>& alpha) {
    const RotorState evolved = flux_evolve(initial, qt, alpha.value_or(FluxParameter{}));
    return std::min(1.0, std::norm(inner_product(initial, evolved)));
}

RevivalScan revival_scan(const RotorState& initial, std::int64_t j_max,
                         const std::optional<FluxParameter>& alpha, std::int64_t dilation) {
    if (j_max < 1) throw DomainError("j_max must be >= 1");
    RevivalScan scan;
    scan.samples.reserve(static_cast<std::size_t>(j_max) + 1);
    for (std::int64_t j = 0; j <= j_max; ++j) {
        const double value = autocorrelation(initial, QuantizedTime(j, dilation, initial.dim()), alpha);
        scan.samples.push_back({j, value});
        if (j > 0 && !scan.revival_step && value >= 1.0 - kRevivalEpsilon) scan.revival_step = j;
    }
    return scan;
}

FractionalRevival fractional_revival_fidelity(const RotorState& initial, std::int64_t step) {
    const int d = initial.dim();
    const RotorState evolved = free_evolve(initial, QuantizedTime(step, 1, d));
    const Complex A = inner_product(initial, evolved);
    FractionalRevival best;
    for (const std::int64_t turns : std::array<std::int64_t, 2>{d / 2, d / 2 + 1}) {
        const RotorState opposite = rotate(initial, turns);
        const auto candidate = maximize_over_phase(A, inner_product(opposite, evolved),
                                                   inner_product(initial, opposite));
        if (candidate.fidelity > best.fidelity) best = candidate;
    }
    return best;
}

std::vector<Rational> flux_spectrum(int l, const FluxParameter& alpha) {
    if (l < 0) throw DomainError("angular momentum cutoff must be non-negative");
    std::vector<Rational> energies;
    energies.reserve(2 * l + 1);
    for (int m = -l; m <= l; ++m) {
        const Rational shifted = Rational(static_cast<std::int64_t>(m)) - alpha.value();
        energies.push_back(shifted * shifted);
    }
    return energies;
}

namespace detail {

RotorState evolve_continuous(const RotorState& state, double tau) {
    const int l = state.cutoff();
    std::vector<Complex> amps(state.dim());
    for (int k = -l; k <= l; ++k) {
        amps[k + l] = std::polar(1.0, -tau * k * k) * state.amplitude(k);
    }
    return RotorState(l, std::move(amps));
}

}  // namespace detail

}  // namespace qrotor
