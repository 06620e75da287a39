#pragma once

#include <optional>

#include "asym/gauge.hpp"

namespace asym {

/// ‖p|♭ = sup over the unit ball of ⟨p, x⟩.
struct FlatNorm {
    ExtendedRational value;
    /// Attaining ball point, or a ray r with ⟨p, r⟩ > 0 and ‖r| = 0 when p ∉ X♭.
    Certificate certificate;
};

FlatNorm flat_norm(const PolyhedralGauge& g, const Vec& p);

/// ‖p‖_*: the dual norm of the associated symmetric space.
Rational symmetric_dual_norm(const PolyhedralGauge& g, const Vec& p);

struct Membership {
    bool member = true;
    ExtendedRational flat_norm;
    std::optional<Vec> violating_ray;
};

/// p ∈ X♭ iff ⟨p, d⟩ ≤ 0 along every recession direction d of the unit ball.
Membership in_dual_cone(const PolyhedralGauge& g, const Vec& p);

struct DualFunctional {
    Vec p;
    ExtendedRational flat_norm;
};

/**
 * A functional p with ‖p|♭ = 1 and ⟨p, x₀⟩ = ‖x₀|: the lowest-index
 * generator active at x₀. Both properties are re-verified. Throws
 * PreconditionError when ‖x₀| = 0.
 */
DualFunctional support_functional(const PolyhedralGauge& g, const Vec& x0);

/**
 * X♭ is the whole dual space. Decided on the cone's generators: the 2n
 * coordinate functionals ±eₖ* must all have finite flat norm.
 */
bool dual_cone_full(const PolyhedralGauge& g);

/// A p ∈ X♭ with −p ∉ X♭ when X is not T1; nullopt otherwise.
struct NonreversibleFunctional {
    Vec p;
    Vec ray;  // certifies −p ∉ X♭
};

std::optional<NonreversibleFunctional> nonreversible_functional(const PolyhedralGauge& g);

} // namespace asym
