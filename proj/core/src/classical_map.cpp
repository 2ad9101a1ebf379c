#include "qrotor/classical_map.hpp"

#include <numeric>
#include <string>

#include "qrotor/detail/phase.hpp"
#include "qrotor/errors.hpp"
#include "qrotor/evolution.hpp"

namespace qrotor {

TwistPoint make_twist_point(long a, long b, int dim) {
    if (dim < 1) throw DomainError("lattice dimension must be >= 1");
    if (a < 0 || a >= dim || b < 0 || b >= dim) {
        throw DomainError("twist point (" + std::to_string(a) + ", " + std::to_string(b) +
                          ") outside [0, " + std::to_string(dim) + ")^2");
    }
    return {a, b, dim};
}

TwistPoint twist_step(const TwistPoint& p) {
    return {detail::floor_mod(p.a - 2 * p.b, p.dim), p.b, p.dim};
}

TwistPoint twist_step_inverse(const TwistPoint& p) {
    return {detail::floor_mod(p.a + 2 * p.b, p.dim), p.b, p.dim};
}

std::int64_t map_period(int dim) {
    if (dim < 1 || dim % 2 == 0) {
        throw Unsupported("twist map period is only defined here for odd D, got D=" + std::to_string(dim));
    }
    // twist^j (a, b) = (a - 2 j b, b); identity for all b iff D | 2j.
    return dim / std::gcd(2, dim);
}

RepresentativeGrid transport_grid(const RepresentativeGrid& rep, std::int64_t step) {
    if (step < 0) throw DomainError("transport step must be non-negative");
    const int d = rep.dim();
    std::vector<double> out(static_cast<std::size_t>(d) * d);
    for (long a = 0; a < d; ++a) {
        for (long b = 0; b < d; ++b) {
            const long source = detail::floor_mod(a - detail::mul_mod(2 * step, b, d), d);
            out[static_cast<std::size_t>(a) * d + b] = rep.at(source, b);
        }
    }
    return RepresentativeGrid(d, std::move(out));
}

double compare_quantum_classical(const RotorState& state, std::int64_t step) {
    const auto quantum =
        representative(build_wigner(free_evolve(state, QuantizedTime(step, 1, state.dim()))));
    const auto classical = transport_grid(representative(build_wigner(state)), step);
    return max_abs_deviation(quantum, classical);
}

}  // namespace qrotor
