#include "asym/symmetry.hpp"

#include "asym/errors.hpp"

namespace asym {

namespace {

// Sphere piece of generator i in (x, t) coordinates, with ⟨−aⱼ, x⟩ ≤ t.
HPolyhedron index_piece(const PolyhedralGauge& g, std::size_t i, IndexMutation mutation)
{
    const std::size_t n = g.dim();
    HPolyhedron p(n + 1);
    const auto& gens = g.generators();
    const std::size_t reverse_rows = gens.size() - (mutation == IndexMutation::drop_reverse_row ? 1 : 0);
    for (std::size_t j = 0; j < reverse_rows; ++j) {
        Vec row = -gens[j];
        row.push_back(Rational(-1));
        p.add_row(std::move(row), Rational(0));
    }
    if (mutation != IndexMutation::drop_ball_rows) {
        for (const auto& a : g.generators()) {
            Vec row = a;
            row.push_back(Rational(0));
            p.add_row(std::move(row), Rational(1));
        }
    }
    Vec face = g.generators()[i];
    face.push_back(Rational(0));
    p.add_equality(face, Rational(1));
    return p;
}

// Least-ℓ¹ point of sphere piece i with ‖−x| ≤ c, in (x, u) coordinates.
Vec least_l1_minimizer(const PolyhedralGauge& g, std::size_t i, const Rational& c, IndexMutation mutation)
{
    const std::size_t n = g.dim();
    HPolyhedron p(2 * n);
    auto lift = [n](const Vec& a) {
        Vec row = a;
        row.resize(2 * n, Rational(0));
        return row;
    };
    for (std::size_t k = 0; k < n; ++k) {
        Vec plus = zeros(2 * n), minus = zeros(2 * n);
        plus[k] = 1;
        plus[n + k] = -1;
        minus[k] = -1;
        minus[n + k] = -1;
        p.add_row(std::move(plus), Rational(0));
        p.add_row(std::move(minus), Rational(0));
    }
    const auto& gens = g.generators();
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (mutation != IndexMutation::drop_ball_rows)
            p.add_row(lift(gens[j]), Rational(1));
        if (mutation != IndexMutation::drop_reverse_row || j + 1 < gens.size())
            p.add_row(lift(-gens[j]), c);
    }
    p.add_equality(lift(g.generators()[i]), Rational(1));

    Vec objective = zeros(2 * n);
    for (std::size_t k = 0; k < n; ++k)
        objective[n + k] = 1;
    const LpOutcome lp = lp_solve(objective, Sense::minimize, p);
    if (lp.status != LpStatus::optimal)
        throw InvariantViolation("least-l1 minimizer LP did not reach an optimum");
    return Vec(lp.point.begin(), lp.point.begin() + static_cast<std::ptrdiff_t>(n));
}

} // namespace

IndexResult index(const PolyhedralGauge& g, IndexMutation mutation)
{
    std::optional<IndexResult> best;
    const std::size_t n = g.dim();
    Vec objective = zeros(n + 1);
    objective[n] = 1;
    for (std::size_t i = 0; i < g.generators().size(); ++i) {
        const LpOutcome lp = lp_solve(objective, Sense::minimize, index_piece(g, i, mutation));
        if (lp.status == LpStatus::infeasible)
            continue;
        if (lp.status == LpStatus::unbounded)
            throw InvariantViolation("index LP unbounded: reverse norm went negative");
        if (!best || lp.value < best->c)
            best = IndexResult{lp.value, {}, i};
    }
    if (!best)
        throw InvariantViolation("unit sphere is empty for a validated gauge");

    best->minimizer = least_l1_minimizer(g, best->facet, best->c, mutation);
    if (mutation == IndexMutation::none) {
        if (best->c < 0 || best->c > 1)
            throw InvariantViolation("index of symmetry " + format_rational(best->c) + " outside [0, 1]");
        if (eval_norm(g, best->minimizer) != 1 || eval_reverse(g, best->minimizer) != best->c)
            throw InvariantViolation("index minimizer does not attain c on the unit sphere");
    }
    return *best;
}

SupReverse sup_reverse(const PolyhedralGauge& g)
{
    const HPolyhedron ball = unit_ball(g);
    SupReverse best{ExtendedRational(0), {Certificate::Kind::point, zeros(g.dim())}};
    bool first = true;
    for (const auto& a : g.generators()) {
        SupportResult s = support_value(ball, -a);
        if (s.value.is_infinite()) {
            if (eval_reverse(g, s.certificate.coords) <= 0 || eval_norm(g, s.certificate.coords) != 0)
                throw InvariantViolation("sup_reverse ray certificate does not re-verify");
            return {s.value, s.certificate};
        }
        if (first || s.value > best.value) {
            best = {s.value, s.certificate};
            first = false;
        }
    }
    // Finite sup: a bounded ball, where c > 0 forces the maximizer onto the sphere.
    if (eval_norm(g, best.certificate.coords) != 1)
        throw InvariantViolation("bounded ball with c = 0: a type II space in finite dimension");
    if (eval_reverse(g, best.certificate.coords) != best.value.value())
        throw InvariantViolation("sup_reverse maximizer does not attain its value");
    return best;
}

bool check_identity(const PolyhedralGauge& g, IndexMutation mutation)
{
    const IndexResult idx = index(g, mutation);
    if (idx.c == 0)
        throw PreconditionError("the product identity needs c(X) > 0");
    const SupReverse s = sup_reverse(g);
    return s.value.is_finite() && s.value.value() * idx.c == 1;
}

T1Result is_t1(const PolyhedralGauge& g)
{
    auto d = recession_direction(unit_ball(g));
    if (!d)
        return {};
    if (is_zero(*d) || eval_norm(g, *d) != 0)
        throw InvariantViolation("non-T1 certificate does not re-verify");
    return {false, std::move(d)};
}

std::string to_string(SpaceType t)
{
    switch (t) {
    case SpaceType::I:
        return "I";
    case SpaceType::II:
        return "II";
    case SpaceType::III:
        return "III";
    }
    return "?";
}

namespace {

SpaceType type_of(const Rational& c, bool t1)
{
    if (c > 0 && !t1)
        throw InvariantViolation("c > 0 but the space is not T1");
    if (c == 0 && t1)
        throw InvariantViolation("c = 0 on a T1 space: a type II space in finite dimension");
    return c > 0 ? SpaceType::I : SpaceType::III;
}

} // namespace

SpaceType classify(const PolyhedralGauge& g) { return type_of(index(g).c, is_t1(g).t1); }

SymmetryReport analyze(const PolyhedralGauge& g)
{
    const IndexResult idx = index(g);
    T1Result t1 = is_t1(g);
    SymmetryReport r;
    r.c = idx.c;
    r.minimizer = idx.minimizer;
    r.sup_reverse = sup_reverse(g);
    r.t1 = t1.t1;
    r.t1_certificate = std::move(t1.certificate);
    r.space_type = type_of(r.c, r.t1);
    return r;
}

} // namespace asym
