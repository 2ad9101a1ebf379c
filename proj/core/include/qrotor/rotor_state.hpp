#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace qrotor {

using Complex = std::complex<double>;

/// Normalization tolerance shared by every state constructor.
inline constexpr double kNormTolerance = 1e-12;

/**
 * A vector of the (2l+1)-dimensional truncated rotor space, expanded in
 * angular momentum eigenstates |m>, m = -l..l.
 *
 * Amplitudes are stored in index order m = -l..l (position p = m + l).
 * Indices outside [-l, l] resolve periodically modulo D = 2l+1, which is
 * the torus identification the discrete Wigner function relies on.
 */
class RotorState {
public:
    /// Builds a state from D = 2l+1 amplitudes. With `normalize` the vector is
    /// rescaled to unit norm; otherwise it must already be normalized.
    RotorState(int l, std::vector<Complex> amplitudes, bool normalize = false);

    int cutoff() const noexcept { return l_; }
    int dim() const noexcept { return 2 * l_ + 1; }

    /// c_m with m taken modulo D.
    Complex amplitude(long m) const noexcept;

    /// Amplitudes in storage order m = -l..l.
    std::span<const Complex> amplitudes() const noexcept { return amps_; }

    /// Storage position of m after periodic reduction.
    std::size_t position(long m) const noexcept;

    double norm() const noexcept;

private:
    int l_;
    std::vector<Complex> amps_;
};

/// <theta_n|psi> for n = 0..2l together with the angle eigenvalues.
struct AngleRepresentation {
    int dim = 0;
    std::vector<Complex> values;
    std::vector<double> thetas;
};

/// theta_n = 2 pi n / (2l+1).
double angle_eigenvalue(int l, int n);

RotorState make_momentum_state(int l, int m);
RotorState make_angle_state(int l, int n);

/// c_m proportional to exp(-sigma^2 m^2 / 2) exp(-i m center_angle).
RotorState make_gaussian_packet(int l, double center_angle, double width);

/// Complex Gaussian amplitudes, normalized. Full support with probability one.
RotorState make_random_state(int l, std::mt19937_64& rng);

AngleRepresentation to_angle_representation(const RotorState& state);

/// Inverse of to_angle_representation (completeness of the angle basis).
RotorState from_angle_representation(const AngleRepresentation& rep);

/// <a|b> = sum_m conj(a_m) b_m.
Complex inner_product(const RotorState& a, const RotorState& b);

/// |m> -> |m+1>, with |l> -> |-l>.
RotorState momentum_shift(const RotorState& state);

/// c_m -> exp(-i m 2 pi / D) c_m, i.e. |theta_n> -> |theta_{n+1}>.
RotorState angle_shift(const RotorState& state);

}  // namespace qrotor
