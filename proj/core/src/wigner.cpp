#include "qrotor/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qrotor/detail/phase.hpp"
#include "qrotor/errors.hpp"
#include "qrotor/evolution.hpp"

namespace qrotor {

namespace {

void require_odd(int dim) {
    if (dim < 1 || dim % 2 == 0) {
        throw Unsupported("only odd dimensions D >= 1 are supported, got D=" + std::to_string(dim));
    }
}

struct ComplexGrid {
    std::vector<double> real;
    double residue = 0.0;
};

ComplexGrid evaluate(const RotorState& state) {
    const int l = state.cutoff();
    const int d = state.dim();
    const int side = 2 * d;
    const double scale = 1.0 / side;
    ComplexGrid out;
    out.real.resize(static_cast<std::size_t>(side) * side);
    std::vector<Complex> roots(side);
    for (int t = 0; t < side; ++t) roots[t] = detail::root_of_unity(t, side);
    // Products conj(c_k) c_{r-k} depend only on (k, r); precompute per r.
    std::vector<Complex> products(d);
    for (int r = -2 * l; r <= 2 * l + 1; ++r) {
        for (int k = -l; k <= l; ++k) {
            products[k + l] = std::conj(state.amplitude(k)) * state.amplitude(r - k);
        }
        for (int s = 0; s < side; ++s) {
            Complex sum = 0.0;
            for (int k = -l; k <= l; ++k) {
                // exp(i pi s (r - 2k) / D) = exp(2 pi i s (r - 2k) / (2D))
                sum += products[k + l] * roots[detail::floor_mod(static_cast<std::int64_t>(s) * (r - 2 * k), side)];
            }
            sum *= scale;
            out.real[static_cast<std::size_t>(s) * side + (r + 2 * l)] = sum.real();
            out.residue = std::max(out.residue, std::abs(sum.imag()));
        }
    }
    return out;
}

std::int64_t exact_integer(const Rational& value, const char* what, std::int64_t quanta,
                           const FluxParameter& alpha) {
    if (value.denominator() != 1) {
        throw FluxNotAdmissible(std::string(what) + " is not an integer for alpha=" + alpha.str() +
                                " at j*n'=" + std::to_string(quanta) +
                                "; the Wigner function is not defined on the lattice");
    }
    return value.numerator();
}

}  // namespace

WignerGrid::WignerGrid(int dim, std::vector<double> values) : dim_(dim), values_(std::move(values)) {
    require_odd(dim);
    if (values_.size() != static_cast<std::size_t>(4) * dim * dim) {
        throw DimensionMismatch(4L * dim * dim, static_cast<long>(values_.size()));
    }
}

long WignerGrid::canonical_r(long r) const noexcept {
    return detail::floor_mod(r - r_min(), side()) + r_min();
}

std::size_t WignerGrid::index(long s, long r) const noexcept {
    const auto si = detail::floor_mod(s, side());
    const auto ri = detail::floor_mod(r - r_min(), side());
    return static_cast<std::size_t>(si * side() + ri);
}

double WignerGrid::total() const noexcept {
    double sum = 0.0;
    for (double v : values_) sum += v;
    return sum;
}

RepresentativeGrid::RepresentativeGrid(int dim, std::vector<double> values)
    : dim_(dim), values_(std::move(values)) {
    require_odd(dim);
    if (values_.size() != static_cast<std::size_t>(dim) * dim) {
        throw DimensionMismatch(static_cast<long>(dim) * dim, static_cast<long>(values_.size()));
    }
}

double RepresentativeGrid::at(long a, long b) const noexcept {
    return values_[static_cast<std::size_t>(detail::floor_mod(a, dim_) * dim_ + detail::floor_mod(b, dim_))];
}

WignerGrid build_wigner(const RotorState& state) {
    auto grid = evaluate(state);
    if (grid.residue > kRealityTolerance) {
        throw ConsistencyError("Wigner reality check failed: imaginary residue " +
                               std::to_string(grid.residue));
    }
    return WignerGrid(state.dim(), std::move(grid.real));
}

double wigner_reality_residue(const RotorState& state) { return evaluate(state).residue; }

double marginal_momentum(const WignerGrid& grid, long r) {
    double sum = 0.0;
    for (long s = 0; s < grid.side(); ++s) sum += grid.at(s, r);
    return sum;
}

double marginal_angle(const WignerGrid& grid, long s) {
    double sum = 0.0;
    for (long r = grid.r_min(); r <= grid.r_max(); ++r) sum += grid.at(s, r);
    return sum;
}

RepresentativeGrid representative(const WignerGrid& grid) {
    const int d = grid.dim();
    std::vector<double> values(static_cast<std::size_t>(d) * d);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) values[static_cast<std::size_t>(a) * d + b] = grid.at(2L * a, 2L * b);
    }
    return RepresentativeGrid(d, std::move(values));
}

WignerGrid shear_transport(const WignerGrid& grid, std::int64_t step, std::int64_t dilation,
                           const FluxParameter& alpha) {
    if (step < 0 || dilation < 1) throw DomainError("shear requires j >= 0 and n' >= 1");
    const std::int64_t quanta = step * dilation;
    const std::int64_t offset =
        exact_integer(Rational(4 * quanta) * alpha.value(), "shear offset 4 j n' alpha", quanta, alpha);
    const int side = grid.side();
    std::vector<double> out(grid.values().size());
    for (long s = 0; s < side; ++s) {
        for (long r = grid.r_min(); r <= grid.r_max(); ++r) {
            // s - 2 j n' r + 4 j n' alpha, reduced mod 2D
            const std::int64_t source =
                detail::floor_mod(s - detail::mul_mod(2 * quanta, r, side) + detail::floor_mod(offset, side), side);
            out[static_cast<std::size_t>(s) * side + (r - grid.r_min())] = grid.at(source, r);
        }
    }
    return WignerGrid(grid.dim(), std::move(out));
}

bool representative_invariant(std::int64_t step, std::int64_t dilation, const FluxParameter& alpha) {
    const __int128 twice = static_cast<__int128>(2) * step * dilation;
    return twice % alpha.den() == 0;
}

double verify_shear_equivalence(const RotorState& state, std::int64_t step, std::int64_t dilation,
                                const FluxParameter& alpha) {
    if (!representative_invariant(step, dilation, alpha)) {
        throw FluxNotAdmissible("alpha=" + alpha.str() + " with j*n'=" + std::to_string(step * dilation) +
                                " does not leave the representative Wigner lattice invariant "
                                "(2 j n' alpha must be an integer)");
    }
    const auto evolved = build_wigner(flux_evolve(state, QuantizedTime(step, dilation, state.dim()), alpha));
    const auto transported = shear_transport(build_wigner(state), step, dilation, alpha);
    return max_abs_deviation(evolved, transported);
}

double max_abs_deviation(const WignerGrid& a, const WignerGrid& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
    double worst = 0.0;
    for (std::size_t i = 0; i < a.values().size(); ++i) {
        worst = std::max(worst, std::abs(a.values()[i] - b.values()[i]));
    }
    return worst;
}

double max_abs_deviation(const RepresentativeGrid& a, const RepresentativeGrid& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
    double worst = 0.0;
    for (std::size_t i = 0; i < a.values().size(); ++i) {
        worst = std::max(worst, std::abs(a.values()[i] - b.values()[i]));
    }
    return worst;
}

}  // namespace qrotor
