#pragma once

#include <cstdint>

#include "qrotor/rotor_state.hpp"
#include "qrotor/wigner.hpp"

namespace qrotor {

/// Point (a, b) of the representative lattice; (x, y) = (a/D, b/D) on the unit torus.
struct TwistPoint {
    long a = 0;
    long b = 0;
    int dim = 1;

    friend bool operator==(const TwistPoint&, const TwistPoint&) = default;
};

TwistPoint make_twist_point(long a, long b, int dim);

/// x -> x - 2y (mod 1), y fixed: matrix ((1, -2), (0, 1)) on integer coordinates.
TwistPoint twist_step(const TwistPoint& p);

/// Inverse of twist_step.
TwistPoint twist_step_inverse(const TwistPoint& p);

/// Least j >= 1 with twist_step^j = identity on the whole D x D lattice.
std::int64_t map_period(int dim);

/// out(a, b) = in(twist_step^j (a, b)) = in((a - 2 j b) mod D, b).
RepresentativeGrid transport_grid(const RepresentativeGrid& rep, std::int64_t step);

/// Max-abs difference between the representative grid of the free-evolved
/// state and the twist-transported representative grid of the initial state.
double compare_quantum_classical(const RotorState& state, std::int64_t step);

}  // namespace qrotor
