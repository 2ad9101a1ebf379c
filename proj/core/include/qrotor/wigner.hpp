#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qrotor/flux.hpp"
#include "qrotor/rotor_state.hpp"

namespace qrotor {

/// Largest tolerated imaginary residue when realizing a Wigner function.
inline constexpr double kRealityTolerance = 1e-12;

/**
 * Discrete Wigner function on the doubled (2D)^2 lattice.
 *
 * s runs over [0, 2D) and r over [-2l, 2l+1]; both are cyclic with period 2D,
 * so any integer index is accepted and reduced. Storage is row-major in s
 * with r at offset r + 2l.
 */
class WignerGrid {
public:
    WignerGrid(int dim, std::vector<double> values);

    int dim() const noexcept { return dim_; }
    int cutoff() const noexcept { return (dim_ - 1) / 2; }
    int side() const noexcept { return 2 * dim_; }

    /// Smallest and largest r in the signed convention.
    int r_min() const noexcept { return -2 * cutoff(); }
    int r_max() const noexcept { return 2 * cutoff() + 1; }

    double at(long s, long r) const noexcept { return values_[index(s, r)]; }

    /// Maps any r onto the signed range [-2l, 2l+1].
    long canonical_r(long r) const noexcept;

    std::span<const double> values() const noexcept { return values_; }

    double total() const noexcept;

private:
    std::size_t index(long s, long r) const noexcept;

    int dim_;
    std::vector<double> values_;
};

/// The D x D even-s, even-r sublattice, indexed by (a, b) = (s/2, r/2) mod D.
class RepresentativeGrid {
public:
    RepresentativeGrid(int dim, std::vector<double> values);

    int dim() const noexcept { return dim_; }
    double at(long a, long b) const noexcept;
    std::span<const double> values() const noexcept { return values_; }

private:
    int dim_;
    std::vector<double> values_;   // row-major in a
};

/// W(s, r) = 1/(2D) sum_k conj(c_k) c_{r-k} exp(i pi s (r - 2k) / D).
/// Throws ConsistencyError if any imaginary residue exceeds kRealityTolerance.
WignerGrid build_wigner(const RotorState& state);

/// Largest |Im W| seen while building the grid for `state`.
double wigner_reality_residue(const RotorState& state);

/// sum over s of W(s, r).
double marginal_momentum(const WignerGrid& grid, long r);

/// sum over r of W(s, r).
double marginal_angle(const WignerGrid& grid, long s);

RepresentativeGrid representative(const WignerGrid& grid);

/// out(s, r) = in(s - 2 j n' r + 4 j n' alpha mod 2D, r). Requires 4 j n' alpha integral.
WignerGrid shear_transport(const WignerGrid& grid, std::int64_t step, std::int64_t dilation,
                           const FluxParameter& alpha);

/// Whether the shear at (j, n', alpha) maps the even-even sublattice onto itself,
/// i.e. 2 j n' alpha is an integer.
bool representative_invariant(std::int64_t step, std::int64_t dilation, const FluxParameter& alpha);

/// Max |W(evolved) - shear(W(initial))| over the grid. Throws FluxNotAdmissible
/// unless the representative lattice is invariant at (j, n', alpha).
double verify_shear_equivalence(const RotorState& state, std::int64_t step, std::int64_t dilation,
                                const FluxParameter& alpha);

/// Max-abs difference of two grids of equal dimension.
double max_abs_deviation(const WignerGrid& a, const WignerGrid& b);
double max_abs_deviation(const RepresentativeGrid& a, const RepresentativeGrid& b);

}  // namespace qrotor
