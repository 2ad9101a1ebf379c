#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace qrotor::detail {

/// Non-negative residue of `value` modulo `modulus` (> 0).
constexpr std::int64_t floor_mod(std::int64_t value, std::int64_t modulus) noexcept {
    const std::int64_t r = value % modulus;
    return r < 0 ? r + modulus : r;
}

/// (a * b) mod m without overflow, for m > 0.
constexpr std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) noexcept {
    const __int128 p = static_cast<__int128>(floor_mod(a, m)) * floor_mod(b, m);
    return static_cast<std::int64_t>(p % m);
}

/// exp(2 pi i numerator / denominator). The argument is reduced to [0, 1)
/// in integers before the transcendental call so the rounding error does
/// not grow with the size of the numerator.
inline std::complex<double> root_of_unity(std::int64_t numerator, std::int64_t denominator) {
    const std::int64_t r = floor_mod(numerator, denominator);
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) /
                         static_cast<double>(denominator);
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace qrotor::detail
