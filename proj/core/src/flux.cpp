#include "qrotor/flux.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

#include "qrotor/errors.hpp"

namespace qrotor {

namespace {

void require_dilation(std::int64_t dilation) {
    if (dilation < 1) {
        throw DomainError("time-quantum dilation must be >= 1, got " + std::to_string(dilation));
    }
}

// k * n' * m / n is an integer; gcd(m, n) = 1 reduces this to n | k * n'.
bool integral_multiple(const FluxParameter& alpha, std::int64_t k, std::int64_t dilation) {
    return static_cast<__int128>(k) * dilation % alpha.den() == 0;
}

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
    std::int64_t value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    if (!text.empty() && text.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw DomainError("malformed rational '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

std::string FluxParameter::str() const {
    return std::to_string(num()) + "/" + std::to_string(den());
}

FluxParameter canonicalize(std::int64_t m, std::int64_t n) {
    if (n == 0) throw DomainError("flux denominator must be non-zero");
    return FluxParameter(Rational(m, n));
}

FluxParameter parse_flux(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return canonicalize(parse_integer(text, text), 1);
    return canonicalize(parse_integer(text.substr(0, slash), text),
                        parse_integer(text.substr(slash + 1), text));
}

bool full_grid_admissible(const FluxParameter& alpha, std::int64_t dilation) {
    require_dilation(dilation);
    return integral_multiple(alpha, 4, dilation);
}

bool representative_admissible(const FluxParameter& alpha, std::int64_t dilation) {
    require_dilation(dilation);
    return integral_multiple(alpha, 2, dilation);
}

std::int64_t minimal_dilation(const FluxParameter& alpha) {
    return alpha.den() / std::gcd<std::int64_t>(2, alpha.den());
}

std::int64_t resolve_dilation(const FluxParameter& alpha, DilationPolicy policy) {
    return policy == DilationPolicy::Minimal ? minimal_dilation(alpha) : paper_dilation(alpha);
}

AdmissibilityReport admissibility_report(const FluxParameter& alpha, DilationPolicy policy) {
    AdmissibilityReport report;
    report.alpha = alpha;
    report.full_grid_ok_at_base = full_grid_admissible(alpha, 1);
    report.representative_ok_at_base = representative_admissible(alpha, 1);
    report.minimal_dilation = minimal_dilation(alpha);
    report.paper_dilation = paper_dilation(alpha);
    report.winding_number = resolve_dilation(alpha, policy);
    return report;
}

FluxProbe irrational_flux_probe(double alpha, std::int64_t n_max) {
    if (n_max < 1) throw DomainError("n_max must be >= 1");
    if (!std::isfinite(alpha)) throw DomainError("flux value must be finite");

    FluxProbe probe;
    // Convergents h_k / k_k of the continued fraction of alpha.
    std::int64_t h_prev = 1, h_prev2 = 0;
    std::int64_t k_prev = 0, k_prev2 = 1;
    double rest = alpha;
    for (int depth = 0; depth < 64; ++depth) {
        const double a_real = std::floor(rest);
        if (std::abs(a_real) > 1e15) break;
        const auto a = static_cast<std::int64_t>(a_real);
        const __int128 h = static_cast<__int128>(a) * h_prev + h_prev2;
        const __int128 k = static_cast<__int128>(a) * k_prev + k_prev2;
        if (k > n_max || h > INT64_MAX || h < INT64_MIN) break;

        const auto candidate = canonicalize(static_cast<std::int64_t>(h), static_cast<std::int64_t>(k));
        probe.convergents.push_back(candidate);
        if (std::abs(alpha - candidate.approx()) <= kProbeTolerance) {
            probe.match = candidate;
            probe.minimal_dilation = minimal_dilation(candidate);
            break;
        }

        h_prev2 = h_prev;
        h_prev = static_cast<std::int64_t>(h);
        k_prev2 = k_prev;
        k_prev = static_cast<std::int64_t>(k);
        const double frac = rest - a_real;
        if (frac == 0.0) break;
        rest = 1.0 / frac;
    }
    return probe;
}

}  // namespace qrotor
