#include "asym/gauge.hpp"

#include <algorithm>

#include "asym/errors.hpp"

namespace asym {

PolyhedralGauge::PolyhedralGauge(std::size_t dim, std::vector<Vec> generators, std::string label)
    : dim_(dim), generators_(std::move(generators)), label_(std::move(label))
{
    if (dim_ == 0)
        throw InputError("gauge dimension must be positive");
    if (generators_.empty())
        throw InputError("gauge needs at least one generator");
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].size() != dim_)
            throw InputError("generator " + std::to_string(i) + " has " + std::to_string(generators_[i].size()) +
                             " coordinates, expected " + std::to_string(dim_));

    // Nonnegativity: no x with ⟨aᵢ, x⟩ ≤ −1 for all i. Checked as feasibility.
    HPolyhedron negative_region(dim_);
    for (const auto& a : generators_)
        negative_region.add_row(a, Rational(-1));
    const LpOutcome lp = lp_solve(zeros(dim_), Sense::maximize, negative_region);
    if (lp.status != LpStatus::infeasible)
        throw AxiomError(AxiomError::Axiom::nonnegativity,
                         "not nonnegative: max of generators is " + format_rational(eval_norm(*this, lp.point)) +
                             " < 0 at x = " + format_vec(lp.point));

    if (rank(generators_) < dim_)
        throw AxiomError(AxiomError::Axiom::separation,
                         "degenerate: generators span a proper subspace, so some nonzero x has ‖x| = ‖−x| = 0");
}

std::size_t PolyhedralGauge::active_generator(const Vec& x) const
{
    const Rational v = eval_norm(*this, x);
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (dot(generators_[i], x) == v)
            return i;
    throw InvariantViolation("no active generator");
}

namespace {

void check_point(const PolyhedralGauge& g, const Vec& x)
{
    if (x.size() != g.dim())
        throw InputError("point has " + std::to_string(x.size()) + " coordinates, gauge has dimension " +
                         std::to_string(g.dim()));
}

} // namespace

Rational eval_norm(const PolyhedralGauge& g, const Vec& x)
{
    check_point(g, x);
    const auto& gens = g.generators();
    Rational best = dot(gens.front(), x);
    for (std::size_t i = 1; i < gens.size(); ++i) {
        Rational v = dot(gens[i], x);
        if (v > best)
            best = std::move(v);
    }
    return best;
}

Rational eval_reverse(const PolyhedralGauge& g, const Vec& x) { return eval_norm(g, -x); }

Rational symmetric_norm(const PolyhedralGauge& g, const Vec& x)
{
    return std::max(eval_norm(g, x), eval_reverse(g, x));
}

PolyhedralGauge symmetrize(const PolyhedralGauge& g)
{
    std::vector<Vec> gens = g.generators();
    for (const auto& a : g.generators())
        gens.push_back(-a);
    return PolyhedralGauge(g.dim(), std::move(gens), g.label().empty() ? "" : g.label() + "_s");
}

PolyhedralGauge sum_with_symmetric(const PolyhedralGauge& g)
{
    const PolyhedralGauge s = symmetrize(g);
    std::vector<Vec> gens;
    for (const auto& a : g.generators())
        for (const auto& b : s.generators())
            gens.push_back(a + b);
    return PolyhedralGauge(g.dim(), std::move(gens), g.label().empty() ? "" : g.label() + "+s");
}

HPolyhedron unit_ball(const PolyhedralGauge& g)
{
    HPolyhedron ball(g.dim());
    for (const auto& a : g.generators())
        ball.add_row(a, Rational(1));
    return ball;
}

PolyhedralGauge canonicalize(const PolyhedralGauge& g)
{
    // The zero row never constrains the ball; it is restored below if nonnegativity needs it.
    std::vector<Vec> gens;
    for (const auto& a : g.generators())
        if (!is_zero(a) && std::find(gens.begin(), gens.end(), a) == gens.end())
            gens.push_back(a);

    // aₖ is dominated iff ⟨aₖ, x⟩ ≤ 1 on the ball cut out by the others.
    for (std::size_t k = 0; k < gens.size() && gens.size() > 1;) {
        HPolyhedron rest(g.dim());
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (i != k)
                rest.add_row(gens[i], Rational(1));
        const SupportResult s = support_value(rest, gens[k]);
        if (s.value <= ExtendedRational(1))
            gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(k));
        else
            ++k;
    }
    try {
        return PolyhedralGauge(g.dim(), gens, g.label());
    } catch (const AxiomError& e) {
        if (e.axiom() != AxiomError::Axiom::nonnegativity)
            throw InvariantViolation("canonicalization lost the span of the generators");
    }
    gens.push_back(zeros(g.dim()));
    return PolyhedralGauge(g.dim(), std::move(gens), g.label());
}

// ---------------------------------------------------------------------------

PolyhedralGauge upper_real()
{
    return PolyhedralGauge(1, {{Rational(0)}, {Rational(1)}}, "upper_real");
}

PolyhedralGauge referee_plane()
{
    return PolyhedralGauge(2, {{Rational(1), Rational(0)}, {Rational(-1), Rational(0)}, {Rational(0), Rational(1)}},
                           "referee_plane");
}

PolyhedralGauge weighted_linf(std::size_t n)
{
    if (n < 1)
        throw InputError("weighted_linf needs n >= 1");
    std::vector<Vec> gens;
    for (std::size_t k = 0; k < n; ++k)
        gens.push_back(unit_vector(n, k));
    for (std::size_t k = 0; k < n; ++k)
        gens.push_back(Rational(-1, static_cast<long>(k + 1)) * unit_vector(n, k));
    return PolyhedralGauge(n, std::move(gens), "weighted_linf:" + std::to_string(n));
}

PolyhedralGauge sup_gauge(std::size_t n, SupGrid grid)
{
    if (n < 1)
        throw InputError("sup_gauge needs n >= 1");
    std::size_t dim = n;
    std::string label = "sup_gauge:" + std::to_string(n);
    if (grid == SupGrid::pinned_center) {
        if (n % 2 == 0 || n < 3)
            throw InputError("sup_gauge with a pinned center needs an odd number of grid points >= 3");
        dim = n - 1;
    } else {
        label += ":zero_augmented";
    }
    std::vector<Vec> gens;
    for (std::size_t k = 0; k < dim; ++k)
        gens.push_back(unit_vector(dim, k));
    gens.push_back(zeros(dim));
    return PolyhedralGauge(dim, std::move(gens), std::move(label));
}

PolyhedralGauge linf_sym(std::size_t n)
{
    if (n < 1)
        throw InputError("linf_sym needs n >= 1");
    std::vector<Vec> gens;
    for (std::size_t k = 0; k < n; ++k) {
        gens.push_back(unit_vector(n, k));
        gens.push_back(-unit_vector(n, k));
    }
    return PolyhedralGauge(n, std::move(gens), "linf_sym:" + std::to_string(n));
}

namespace {

std::size_t parse_size_argument(const std::string& name, const std::string& text)
{
    const auto v = parse_rational(text);
    if (!v || denominator(*v) != 1 || *v < 1 || *v > 64)
        throw InputError("fixture " + name + ": bad size argument '" + text + "'");
    return static_cast<std::size_t>(numerator(*v).convert_to<long>());
}

} // namespace

PolyhedralGauge fixture(const std::string& name)
{
    if (name == "upper_real")
        return upper_real();
    if (name == "referee_plane")
        return referee_plane();
    const auto colon = name.find(':');
    if (colon != std::string::npos) {
        const std::string base = name.substr(0, colon);
        const std::string arg = name.substr(colon + 1);
        if (base == "weighted_linf")
            return weighted_linf(parse_size_argument(base, arg));
        if (base == "sup_gauge")
            return sup_gauge(parse_size_argument(base, arg));
        if (base == "linf_sym")
            return linf_sym(parse_size_argument(base, arg));
    }
    throw InputError("unknown fixture '" + name +
                     "' (expected upper_real, referee_plane, weighted_linf:<n>, sup_gauge:<n>, linf_sym:<n>)");
}

} // namespace asym
