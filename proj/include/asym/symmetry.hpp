#pragma once

#include <optional>
#include <string>

#include "asym/gauge.hpp"

namespace asym {

/// Index of symmetry with an attaining point of the unit sphere.
struct IndexResult {
    Rational c;
    Vec minimizer;          // ‖minimizer| = 1 and ‖−minimizer| = c
    std::size_t facet = 0;  // generator whose sphere piece attains c
};

/// Fault injection for the verification campaign. Never set outside tests.
enum class IndexMutation {
    none,
    /// Omit ⟨aⱼ, x⟩ ≤ 1. Leaves c unchanged; only the minimizer may leave the sphere.
    drop_ball_rows,
    /// Omit ⟨−aₖ, x⟩ ≤ t for the last generator, so c can be underestimated.
    drop_reverse_row,
};

/**
 * c(X) = inf over the unit sphere of ‖−x|.
 *
 * The sphere is the union over generators i of {⟨aᵢ, x⟩ = 1, ⟨aⱼ, x⟩ ≤ 1};
 * on each piece one LP minimizes t subject to ⟨−aⱼ, x⟩ ≤ t. Pieces whose LP
 * is infeasible are skipped. Among the minimizers of the winning piece the one
 * with least ℓ¹ norm is returned.
 */
IndexResult index(const PolyhedralGauge& g, IndexMutation mutation = IndexMutation::none);

struct SupReverse {
    ExtendedRational value;
    Certificate certificate;  // sphere point attaining the sup, or a ray r with ‖−r| > 0 and ‖r| = 0
};

/// sup over the unit sphere of ‖−x|; +inf exactly when the unit ball is unbounded.
SupReverse sup_reverse(const PolyhedralGauge& g);

/// (sup ‖−x|)·c(X) == 1 over the sphere. Throws PreconditionError when c(X) = 0.
bool check_identity(const PolyhedralGauge& g, IndexMutation mutation = IndexMutation::none);

struct T1Result {
    bool t1 = true;
    std::optional<Vec> certificate;  // nonzero d with ‖d| = 0 when not T1
};

T1Result is_t1(const PolyhedralGauge& g);

enum class SpaceType { I, II, III };

std::string to_string(SpaceType t);

/// Type I or III. Throws InvariantViolation if c = 0 and T1 ever co-occur.
SpaceType classify(const PolyhedralGauge& g);

struct SymmetryReport {
    Rational c;
    std::optional<Vec> minimizer;
    SupReverse sup_reverse;
    bool t1 = true;
    std::optional<Vec> t1_certificate;
    SpaceType space_type = SpaceType::I;
};

SymmetryReport analyze(const PolyhedralGauge& g);

} // namespace asym
