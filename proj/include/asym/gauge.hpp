#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "asym/polyhedra.hpp"
#include "asym/rational.hpp"

namespace asym {

/**
 * An asymmetric norm on Qⁿ of the form ‖x| = maxᵢ ⟨aᵢ, x⟩.
 *
 * Construction validates the two axioms that are not automatic for a max of
 * linear functionals:
 *   - nonnegativity: 0 ∈ conv{aᵢ}, i.e. ‖x| ≥ 0 everywhere;
 *   - separation: the aᵢ span Qⁿ, i.e. ‖x| = ‖−x| = 0 only at x = 0.
 * Positive homogeneity and subadditivity hold by construction. Redundant and
 * zero generators are allowed. Immutable once built.
 */
class PolyhedralGauge
{
public:
    /// Throws InputError on inconsistent shapes and AxiomError on an axiom failure.
    PolyhedralGauge(std::size_t dim, std::vector<Vec> generators, std::string label = {});

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<Vec>& generators() const noexcept { return generators_; }
    const std::string& label() const noexcept { return label_; }

    /// Index of the lowest generator attaining the max at x.
    std::size_t active_generator(const Vec& x) const;

    friend bool operator==(const PolyhedralGauge& a, const PolyhedralGauge& b)
    {
        return a.dim_ == b.dim_ && a.generators_ == b.generators_;
    }

private:
    std::size_t dim_;
    std::vector<Vec> generators_;
    std::string label_;
};

/// ‖x|
Rational eval_norm(const PolyhedralGauge& g, const Vec& x);
/// ‖−x|
Rational eval_reverse(const PolyhedralGauge& g, const Vec& x);
/// ‖x‖ₛ = max(‖x|, ‖−x|)
Rational symmetric_norm(const PolyhedralGauge& g, const Vec& x);

/// Generators {aᵢ} ∪ {−aᵢ}; its norm is ‖·‖ₛ.
PolyhedralGauge symmetrize(const PolyhedralGauge& g);

/// The gauge ‖x| + ‖x‖ₛ, generated by all sums aᵢ + bⱼ with bⱼ from symmetrize(g).
PolyhedralGauge sum_with_symmetric(const PolyhedralGauge& g);

/// {x : ⟨aᵢ, x⟩ ≤ 1 for every generator}
HPolyhedron unit_ball(const PolyhedralGauge& g);

/// Drops duplicate generators and those dominated by the others.
PolyhedralGauge canonicalize(const PolyhedralGauge& g);

// ---------------------------------------------------------------------------
// Fixtures

/// max(0, t) on Q¹.
PolyhedralGauge upper_real();

/// max(|x₁|, x₂⁺) on Q².
PolyhedralGauge referee_plane();

/// n-coordinate truncation of sup_k ‖x_k|_{1/k}: generators eₖ* and −eₖ*/k.
PolyhedralGauge weighted_linf(std::size_t n);

enum class SupGrid {
    /// n (odd) grid points on [−1, 1]; the center value is pinned to 0 and
    /// removed, leaving n − 1 coordinates.
    pinned_center,
    /// n free grid coordinates plus the zero functional.
    zero_augmented,
};

/// Discretized f ↦ sup f: coordinate functionals together with the zero functional.
PolyhedralGauge sup_gauge(std::size_t n, SupGrid grid = SupGrid::pinned_center);

/// The symmetric ℓ∞ norm on Qⁿ.
PolyhedralGauge linf_sym(std::size_t n);

/**
 * Fixture by name: upper_real, referee_plane, weighted_linf:<n>,
 * sup_gauge:<n>, linf_sym:<n>. Throws InputError on an unknown name.
 */
PolyhedralGauge fixture(const std::string& name);

} // namespace asym
