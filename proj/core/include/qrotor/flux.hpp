#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace qrotor {

using Rational = boost::rational<std::int64_t>;

/// Threading flux in units of the flux quantum, alpha = m/n in lowest terms
/// with n >= 1. Zero is 0/1.
class FluxParameter {
public:
    FluxParameter() = default;
    explicit FluxParameter(Rational value) : value_(value) {}

    std::int64_t num() const noexcept { return value_.numerator(); }
    std::int64_t den() const noexcept { return value_.denominator(); }
    Rational value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_.numerator() == 0; }

    /// Only for display and float-facing boundaries.
    double approx() const noexcept { return boost::rational_cast<double>(value_); }

    std::string str() const;

    friend bool operator==(const FluxParameter&, const FluxParameter&) = default;

private:
    Rational value_{0};
};

FluxParameter canonicalize(std::int64_t m, std::int64_t n);

/// Parses "m/n" or a bare integer "m".
FluxParameter parse_flux(std::string_view text);

/// 4 n' alpha is an integer: the shear shift is integral on the full 2D x 2D grid.
bool full_grid_admissible(const FluxParameter& alpha, std::int64_t dilation);

/// 2 n' alpha is an integer: the shear preserves the even-even representative lattice.
bool representative_admissible(const FluxParameter& alpha, std::int64_t dilation);

/// Smallest n' >= 1 with 2 n' alpha integral, n / gcd(2, n).
std::int64_t minimal_dilation(const FluxParameter& alpha);

/// Dilation by the full denominator, n T0 for alpha = m/n.
inline std::int64_t paper_dilation(const FluxParameter& alpha) { return alpha.den(); }

enum class DilationPolicy { Paper, Minimal };

std::int64_t resolve_dilation(const FluxParameter& alpha, DilationPolicy policy);

struct AdmissibilityReport {
    FluxParameter alpha;
    bool full_grid_ok_at_base = true;
    bool representative_ok_at_base = true;
    std::int64_t minimal_dilation = 1;
    std::int64_t paper_dilation = 1;
    /// Windings of the fundamental path around the flux line in one time quantum.
    std::int64_t winding_number = 1;
};

AdmissibilityReport admissibility_report(const FluxParameter& alpha,
                                         DilationPolicy policy = DilationPolicy::Paper);

struct FluxProbe {
    std::optional<FluxParameter> match;
    std::optional<std::int64_t> minimal_dilation;
    /// Continued-fraction convergents with denominator <= n_max that were examined.
    std::vector<FluxParameter> convergents;
};

/// Absolute distance within which a convergent counts as an exact representation.
inline constexpr double kProbeTolerance = 1e-12;

/// Rational reconstruction of a floating-point flux with bounded denominator.
FluxProbe irrational_flux_probe(double alpha, std::int64_t n_max);

}  // namespace qrotor
