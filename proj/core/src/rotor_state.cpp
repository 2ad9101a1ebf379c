#include "qrotor/rotor_state.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qrotor/detail/phase.hpp"
#include "qrotor/errors.hpp"

namespace qrotor {

namespace {

void require_cutoff(int l) {
    if (l < 0) {
        throw DomainError("angular momentum cutoff must be non-negative, got l=" + std::to_string(l));
    }
}

void require_angle_index(int l, int n) {
    require_cutoff(l);
    if (n < 0 || n > 2 * l) {
        throw DomainError("angle index n=" + std::to_string(n) + " outside [0, " +
                          std::to_string(2 * l) + "]");
    }
}

double squared_norm(std::span<const Complex> v) {
    double sum = 0.0;
    for (const auto& c : v) sum += std::norm(c);
    return sum;
}

}  // namespace

RotorState::RotorState(int l, std::vector<Complex> amplitudes, bool normalize)
    : l_(l), amps_(std::move(amplitudes)) {
    require_cutoff(l);
    if (amps_.size() != static_cast<std::size_t>(2 * l + 1)) {
        throw DimensionMismatch(2 * l + 1, static_cast<long>(amps_.size()));
    }
    const double n2 = squared_norm(amps_);
    if (normalize) {
        if (!(n2 > 0.0) || !std::isfinite(n2)) {
            throw DomainError("cannot normalize a zero or non-finite amplitude vector");
        }
        const double scale = 1.0 / std::sqrt(n2);
        for (auto& c : amps_) c *= scale;
    } else if (std::abs(n2 - 1.0) > kNormTolerance) {
        throw DomainError("amplitudes are not normalized: sum |c_m|^2 = " + std::to_string(n2));
    }
}

std::size_t RotorState::position(long m) const noexcept {
    return static_cast<std::size_t>(detail::floor_mod(m + l_, dim()));
}

Complex RotorState::amplitude(long m) const noexcept { return amps_[position(m)]; }

double RotorState::norm() const noexcept { return std::sqrt(squared_norm(amps_)); }

double angle_eigenvalue(int l, int n) {
    require_angle_index(l, n);
    return 2.0 * std::numbers::pi * n / (2 * l + 1);
}

RotorState make_momentum_state(int l, int m) {
    require_cutoff(l);
    if (m < -l || m > l) {
        throw DomainError("momentum m=" + std::to_string(m) + " outside [" + std::to_string(-l) +
                          ", " + std::to_string(l) + "]");
    }
    std::vector<Complex> amps(2 * l + 1);
    amps[m + l] = 1.0;
    return RotorState(l, std::move(amps));
}

RotorState make_angle_state(int l, int n) {
    require_angle_index(l, n);
    const int d = 2 * l + 1;
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<Complex> amps(d);
    for (int m = -l; m <= l; ++m) {
        amps[m + l] = scale * detail::root_of_unity(-static_cast<std::int64_t>(m) * n, d);
    }
    return RotorState(l, std::move(amps), true);
}

RotorState make_gaussian_packet(int l, double center_angle, double width) {
    require_cutoff(l);
    if (!(width > 0.0) || !std::isfinite(width)) {
        throw DomainError("gaussian width must be positive, got " + std::to_string(width));
    }
    std::vector<Complex> amps(2 * l + 1);
    for (int m = -l; m <= l; ++m) {
        const double envelope = std::exp(-0.5 * width * width * m * m);
        amps[m + l] = std::polar(envelope, -m * center_angle);
    }
    return RotorState(l, std::move(amps), true);
}

RotorState make_random_state(int l, std::mt19937_64& rng) {
    require_cutoff(l);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> amps(2 * l + 1);
    for (auto& c : amps) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        c = {re, im};
    }
    return RotorState(l, std::move(amps), true);
}

AngleRepresentation to_angle_representation(const RotorState& state) {
    const int l = state.cutoff();
    const int d = state.dim();
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    AngleRepresentation rep;
    rep.dim = d;
    rep.values.resize(d);
    rep.thetas.resize(d);
    for (int n = 0; n < d; ++n) {
        Complex sum = 0.0;
        for (int m = -l; m <= l; ++m) {
            sum += detail::root_of_unity(static_cast<std::int64_t>(m) * n, d) * state.amplitude(m);
        }
        rep.values[n] = scale * sum;
        rep.thetas[n] = angle_eigenvalue(l, n);
    }
    return rep;
}

RotorState from_angle_representation(const AngleRepresentation& rep) {
    const int d = rep.dim;
    if (d < 1 || d % 2 == 0 || rep.values.size() != static_cast<std::size_t>(d)) {
        throw DomainError("angle representation must hold an odd number D >= 1 of values");
    }
    const int l = (d - 1) / 2;
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<Complex> amps(d);
    for (int m = -l; m <= l; ++m) {
        Complex sum = 0.0;
        for (int n = 0; n < d; ++n) {
            sum += detail::root_of_unity(-static_cast<std::int64_t>(m) * n, d) * rep.values[n];
        }
        amps[m + l] = scale * sum;
    }
    return RotorState(l, std::move(amps));
}

Complex inner_product(const RotorState& a, const RotorState& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    Complex sum = 0.0;
    for (std::size_t p = 0; p < x.size(); ++p) sum += std::conj(x[p]) * y[p];
    return sum;
}

RotorState momentum_shift(const RotorState& state) {
    const int l = state.cutoff();
    std::vector<Complex> amps(state.dim());
    for (int m = -l; m <= l; ++m) amps[state.position(m + 1)] = state.amplitude(m);
    return RotorState(l, std::move(amps));
}

RotorState angle_shift(const RotorState& state) {
    const int l = state.cutoff();
    const int d = state.dim();
    std::vector<Complex> amps(d);
    for (int m = -l; m <= l; ++m) {
        amps[m + l] = detail::root_of_unity(-m, d) * state.amplitude(m);
    }
    return RotorState(l, std::move(amps));
}

}  // namespace qrotor
