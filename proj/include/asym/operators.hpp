#pragma once

#include <optional>

#include "asym/dual.hpp"
#include "asym/gauge.hpp"

namespace asym {

/// x ↦ Mx between two polyhedral gauge spaces.
class LinearOperator
{
public:
    /// matrix is codomain.dim() × domain.dim().
    LinearOperator(Matrix matrix, PolyhedralGauge domain, PolyhedralGauge codomain);

    /// Zero operator.
    LinearOperator(PolyhedralGauge domain, PolyhedralGauge codomain);

    const Matrix& matrix() const noexcept { return matrix_; }
    const PolyhedralGauge& domain() const noexcept { return domain_; }
    const PolyhedralGauge& codomain() const noexcept { return codomain_; }

    Vec apply(const Vec& x) const;

    LinearOperator operator-() const;
    /// Requires identical domain and codomain gauges.
    LinearOperator operator+(const LinearOperator& other) const;
    LinearOperator scaled(const Rational& s) const;

private:
    Matrix matrix_;
    PolyhedralGauge domain_;
    PolyhedralGauge codomain_;
};

struct OpNormReport {
    /// ‖T|_{Lc} = sup over the domain ball of ‖Tx|_Y.
    ExtendedRational lc_norm;
    /// Attaining ball point, or a ray r with ‖r|_X = 0 and ‖Tr|_Y > 0.
    Certificate certificate;
    /// ‖T‖_{Ls}: the operator norm between the associated symmetric spaces.
    Rational ls_norm;
};

/// One support LP over the domain ball per codomain generator bⱼ, on Tᵀbⱼ.
OpNormReport lc_norm(const LinearOperator& t);

Rational ls_norm(const LinearOperator& t);

struct Continuity {
    bool continuous = true;
    std::optional<Vec> ray;
};

Continuity is_continuous(const LinearOperator& t);

/**
 * x ↦ ⟨p, x⟩e. Requires ‖e|_Y = 1 and ‖−e|_Y = 0, under which the map
 * p ↦ p⊗e is an isometry from X♭ into Lc(X, Y); the equality of norms is
 * re-verified before returning.
 */
LinearOperator rank_one(const Vec& p, const Vec& e, const PolyhedralGauge& domain, const PolyhedralGauge& codomain);

/// Lc(X, Y) is a vector space unless c(X) = c(Y) = 0 (Y finite-dimensional).
bool lc_is_vector_space(const PolyhedralGauge& domain, const PolyhedralGauge& codomain);

struct Witness {
    LinearOperator op;        // continuous
    Vec functional;           // p with ‖p|♭ = 1
    Vec direction;            // e with ‖e|_Y = 1, ‖−e|_Y = 0
    Vec discontinuity_ray;    // certifies −op ∉ Lc(X, Y)
};

/**
 * T = p⊗e with −T discontinuous. With d the non-T1 certificate of X,
 * a = −d/‖−d|, p the support functional at a, and e the unit non-T1
 * direction of Y. Throws PreconditionError unless c(X) = 0 and Y is not T1.
 */
Witness nonreversible_witness(const PolyhedralGauge& domain, const PolyhedralGauge& codomain);

struct Perturbation {
    LinearOperator perturbation;  // ε·p⊗e, with ‖·|_{Lc} ≤ ε
    LinearOperator perturbed;     // H + perturbation, continuous
    Vec discontinuity_ray;        // certifies −(H + perturbation) ∉ Lc(X, Y)
};

/// Throws PreconditionError unless c(X) = 0, Y is not T1, H is continuous and ε > 0.
Perturbation perturb_nonsymmetric(const LinearOperator& h, const Rational& epsilon);

/**
 * The gauge T ↦ ‖T|_{Lc} on row-major flattened m×n matrices, generated by
 * bⱼ ⊗ v over codomain generators bⱼ and vertices v of the domain ball.
 * Throws PreconditionError when c(X) = 0, CapacityError past the vertex
 * enumeration cap.
 */
PolyhedralGauge operator_space_gauge(const PolyhedralGauge& domain, const PolyhedralGauge& codomain,
                                     const VRepLimits& limits = {});

Vec flatten(const Matrix& m);

} // namespace asym
