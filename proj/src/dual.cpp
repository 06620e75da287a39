#include "asym/dual.hpp"

#include "asym/errors.hpp"
#include "asym/symmetry.hpp"

namespace asym {

FlatNorm flat_norm(const PolyhedralGauge& g, const Vec& p)
{
    if (p.size() != g.dim())
        throw InputError("functional has " + std::to_string(p.size()) + " coordinates, gauge has dimension " +
                         std::to_string(g.dim()));
    if (is_zero(p))
        return {ExtendedRational(0), {Certificate::Kind::point, zeros(g.dim())}};
    SupportResult s = support_value(unit_ball(g), p);
    if (s.value.is_infinite() && (dot(p, s.certificate.coords) <= 0 || eval_norm(g, s.certificate.coords) != 0))
        throw InvariantViolation("flat norm ray certificate does not re-verify");
    return {s.value, std::move(s.certificate)};
}

Rational symmetric_dual_norm(const PolyhedralGauge& g, const Vec& p)
{
    const SupportResult s = support_value(unit_ball(symmetrize(g)), p);
    if (s.value.is_infinite())
        throw InvariantViolation("symmetric unit ball is unbounded");
    return s.value.value();
}

Membership in_dual_cone(const PolyhedralGauge& g, const Vec& p)
{
    FlatNorm f = flat_norm(g, p);
    if (f.value.is_finite())
        return {true, f.value, std::nullopt};
    return {false, f.value, std::move(f.certificate.coords)};
}

DualFunctional support_functional(const PolyhedralGauge& g, const Vec& x0)
{
    const Rational v = eval_norm(g, x0);
    if (v == 0)
        throw PreconditionError("support functional needs ‖x0| > 0");
    Vec p = g.generators()[g.active_generator(x0)];
    const FlatNorm f = flat_norm(g, p);
    if (f.value != ExtendedRational(1) || dot(p, x0) != v)
        throw InvariantViolation("active generator is not a normalized support functional");
    return {std::move(p), f.value};
}

bool dual_cone_full(const PolyhedralGauge& g)
{
    for (std::size_t k = 0; k < g.dim(); ++k) {
        const Vec e = unit_vector(g.dim(), k);
        if (flat_norm(g, e).value.is_infinite() || flat_norm(g, -e).value.is_infinite())
            return false;
    }
    return true;
}

std::optional<NonreversibleFunctional> nonreversible_functional(const PolyhedralGauge& g)
{
    const T1Result t1 = is_t1(g);
    if (t1.t1)
        return std::nullopt;
    // x₀ = −d has ‖x₀| > 0 by separation, and ⟨p, x₀⟩ > 0 = ‖−x₀|.
    const Vec x0 = -*t1.certificate;
    const DualFunctional sf = support_functional(g, x0);
    const Membership neg = in_dual_cone(g, -sf.p);
    if (neg.member)
        throw InvariantViolation("support functional at a non-T1 direction has a continuous negative");
    return NonreversibleFunctional{sf.p, *neg.violating_ray};
}

} // namespace asym
