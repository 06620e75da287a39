#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "asym/rational.hpp"

namespace asym {

/// {x ∈ Qⁿ : ⟨aᵢ, x⟩ ≤ bᵢ for every row}
class HPolyhedron
{
public:
    struct Row {
        Vec normal;
        Rational bound;
    };

    explicit HPolyhedron(std::size_t dim);
    HPolyhedron(std::size_t dim, std::vector<Row> rows);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<Row>& rows() const noexcept { return rows_; }

    /// Appends ⟨normal, x⟩ ≤ bound.
    void add_row(Vec normal, Rational bound);
    /// Appends both halves of ⟨normal, x⟩ = value.
    void add_equality(const Vec& normal, const Rational& value);

    bool contains(const Vec& x) const;
    /// True when ⟨aᵢ, d⟩ ≤ 0 for every row.
    bool in_recession_cone(const Vec& d) const;

private:
    std::size_t dim_;
    std::vector<Row> rows_;
};

enum class Sense { maximize, minimize };

enum class LpStatus { optimal, unbounded, infeasible };

struct LpOutcome {
    LpStatus status = LpStatus::infeasible;
    Rational value;  // optimal only
    Vec point;       // optimal only
    Vec ray;         // unbounded only; coprime integer coordinates
};

/// Exact simplex (two phases, Bland's rule). Deterministic for fixed input.
LpOutcome lp_solve(const Vec& objective, Sense sense, const HPolyhedron& poly);

/// Either a point of the polyhedron or a direction of its recession cone.
struct Certificate {
    enum class Kind { point, ray };

    Kind kind = Kind::point;
    Vec coords;

    bool is_ray() const noexcept { return kind == Kind::ray; }
};

struct SupportResult {
    ExtendedRational value;
    Certificate certificate;
};

/// sup over the polyhedron of ⟨p, x⟩. Throws InputError when the polyhedron is empty.
SupportResult support_value(const HPolyhedron& poly, const Vec& p);

/// A nonzero d with ⟨aᵢ, d⟩ ≤ 0 for all rows, as coprime integers, or nullopt.
std::optional<Vec> recession_direction(const HPolyhedron& poly);

struct VRep {
    std::vector<Vec> vertices;  // lexicographic order
    std::vector<Vec> rays;      // extreme rays, coprime integers, lexicographic order
};

struct VRepLimits {
    std::size_t max_dim = 8;
    std::size_t max_rows = 64;
};

/**
 * Vertices and extreme rays by the double description method on the
 * homogenized cone {(x, t) : Ax − bt ≤ 0, t ≥ 0}.
 *
 * The polyhedron must be pointed (its normals span Qⁿ); an empty polyhedron
 * yields an empty representation.
 */
VRep enumerate_vrep(const HPolyhedron& poly, const VRepLimits& limits = {});

/// True iff the conic hull of the vectors is all of Qⁿ.
bool positively_spans(const std::vector<Vec>& vectors);

} // namespace asym
