#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asym/errors.hpp"
#include "asym/operators.hpp"
#include "asym/random.hpp"
#include "asym/symmetry.hpp"
#include "oracles.hpp"

using namespace asym;

namespace {

Rational q(long p, long d = 1) { return Rational(p) / Rational(d); }

LinearOperator scalar(long a, long d, const PolyhedralGauge& x, const PolyhedralGauge& y)
{
    return LinearOperator({{q(a, d)}}, x, y);
}

} // namespace

TEST_CASE("construction and arithmetic")
{
    CHECK_THROWS_AS(LinearOperator({{q(1), q(0)}}, upper_real(), upper_real()), InputError);
    CHECK_THROWS_AS(LinearOperator({{q(1)}, {q(0)}}, upper_real(), upper_real()), InputError);
    const LinearOperator t({{q(0), q(1)}}, referee_plane(), upper_real());
    CHECK(t.apply({q(3), q(-2)}) == Vec{q(-2)});
    CHECK((-t).matrix() == Matrix{{q(0), q(-1)}});
    CHECK((t + t).matrix() == t.scaled(q(2)).matrix());
    CHECK_THROWS_AS(t + LinearOperator({{q(0), q(1)}}, referee_plane(), linf_sym(1)), InputError);
    CHECK(LinearOperator(referee_plane(), upper_real()).matrix() == Matrix{{q(0), q(0)}});
}

TEST_CASE("lc_norm examples")
{
    const PolyhedralGauge u = upper_real();
    const OpNormReport id = lc_norm(scalar(1, 1, u, u));
    CHECK(id.lc_norm == ExtendedRational(q(1)));
    CHECK(id.ls_norm == 1);

    const OpNormReport neg = lc_norm(scalar(-1, 1, u, u));
    CHECK(neg.lc_norm.is_infinite());
    CHECK(neg.certificate.is_ray());
    CHECK(neg.certificate.coords == Vec{q(-1)});

    const OpNormReport r = lc_norm(LinearOperator({{q(0), q(1)}}, referee_plane(), u));
    CHECK(r.lc_norm == ExtendedRational(q(1)));
    CHECK(r.ls_norm == 1);
}

TEST_CASE("ls_norm examples")
{
    CHECK(ls_norm(scalar(1, 1, upper_real(), upper_real())) == 1);
    const PolyhedralGauge l = linf_sym(2);
    CHECK(ls_norm(LinearOperator({{q(2), q(0)}, {q(0), q(2)}}, l, l)) == 2);
    const PolyhedralGauge s = symmetrize(weighted_linf(2));
    CHECK(ls_norm(LinearOperator({{q(2), q(0)}, {q(0), q(2)}}, s, s)) == 2);
}

TEST_CASE("is_continuous examples")
{
    const PolyhedralGauge u = upper_real();
    CHECK(is_continuous(scalar(1, 1, u, u)).continuous);
    const Continuity c = is_continuous(scalar(-1, 1, u, u));
    CHECK_FALSE(c.continuous);
    CHECK(c.ray == Vec{q(-1)});
    CHECK(is_continuous(LinearOperator({{q(0), q(1)}}, referee_plane(), u)).continuous);
}

TEST_CASE("rank_one examples")
{
    const PolyhedralGauge u = upper_real();
    const LinearOperator t = rank_one({q(1)}, {q(1)}, u, u);
    CHECK(t.matrix() == Matrix{{q(1)}});
    CHECK(lc_norm(t).lc_norm == ExtendedRational(q(1)));

    const LinearOperator r = rank_one({q(0), q(1)}, {q(1)}, referee_plane(), u);
    CHECK(r.matrix() == Matrix{{q(0), q(1)}});
    CHECK(lc_norm(r).lc_norm == ExtendedRational(q(1)));

    const LinearOperator z = rank_one({q(0), q(0)}, {q(1)}, referee_plane(), u);
    CHECK(lc_norm(z).lc_norm == ExtendedRational(q(0)));

    CHECK_THROWS_AS(rank_one({q(1)}, {q(2)}, u, u), InputError);
    CHECK_THROWS_AS(rank_one({q(1)}, {q(1)}, u, linf_sym(1)), InputError);
}

TEST_CASE("lc_is_vector_space examples")
{
    CHECK_FALSE(lc_is_vector_space(upper_real(), upper_real()));
    CHECK(lc_is_vector_space(referee_plane(), linf_sym(2)));
    CHECK(lc_is_vector_space(weighted_linf(3), upper_real()));
}

TEST_CASE("nonreversible_witness examples")
{
    const PolyhedralGauge u = upper_real();
    const Witness w = nonreversible_witness(u, u);
    CHECK(w.op.matrix() == Matrix{{q(1)}});
    CHECK(w.functional == Vec{q(1)});
    CHECK(w.direction == Vec{q(1)});
    CHECK(w.discontinuity_ray == Vec{q(-1)});

    const Witness r = nonreversible_witness(referee_plane(), u);
    CHECK(r.op.matrix() == Matrix{{q(0), q(1)}});
    CHECK(r.discontinuity_ray == Vec{q(0), q(-1)});

    try {
        nonreversible_witness(weighted_linf(2), u);
        FAIL("expected a precondition failure");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("hypotheses not met") != std::string::npos);
    }
    CHECK_THROWS_AS(nonreversible_witness(u, linf_sym(1)), PreconditionError);
}

TEST_CASE("perturb_nonsymmetric examples")
{
    const PolyhedralGauge u = upper_real();
    const Perturbation p = perturb_nonsymmetric(LinearOperator(u, u), q(1, 1000));
    CHECK(p.perturbation.matrix() == Matrix{{q(1, 1000)}});
    CHECK_FALSE(is_continuous(-p.perturbed).continuous);
    CHECK(lc_norm(p.perturbation).lc_norm <= ExtendedRational(q(1, 1000)));

    const Witness w = nonreversible_witness(u, u);
    const Perturbation s = perturb_nonsymmetric(w.op, q(3));
    CHECK(s.discontinuity_ray == w.discontinuity_ray);

    CHECK_THROWS_AS(perturb_nonsymmetric(LinearOperator(u, u), q(0)), PreconditionError);
    CHECK_THROWS_AS(perturb_nonsymmetric(scalar(-1, 1, u, u), q(1)), PreconditionError);
    CHECK_THROWS_AS(perturb_nonsymmetric(LinearOperator(weighted_linf(2), u), q(1)), PreconditionError);
}

TEST_CASE("operator_space_gauge examples")
{
    const PolyhedralGauge l1 = linf_sym(1);
    const PolyhedralGauge g = operator_space_gauge(l1, l1);
    CHECK(g.dim() == 1);
    CHECK(eval_norm(g, {q(-3)}) == 3);
    CHECK(index(g).c == 1);

    const PolyhedralGauge w = operator_space_gauge(weighted_linf(2), upper_real());
    CHECK(index(w).c >= q(1, 2));

    Rng rng(4);
    const PolyhedralGauge w2 = weighted_linf(2);
    const PolyhedralGauge ww = operator_space_gauge(w2, w2);
    for (int t = 0; t < 100; ++t) {
        const LinearOperator op(random_matrix(rng, 2, 2), w2, w2);
        CHECK(ExtendedRational(eval_norm(ww, flatten(op.matrix()))) == lc_norm(op).lc_norm);
    }

    CHECK_THROWS_AS(operator_space_gauge(upper_real(), upper_real()), PreconditionError);
    VRepLimits tiny;
    tiny.max_dim = 1;
    CHECK_THROWS_AS(operator_space_gauge(weighted_linf(2), upper_real(), tiny), CapacityError);
}

TEST_CASE("lc_norm matches the vertex oracle on random pairs")
{
    Rng rng(12);
    for (int t = 0; t < 300; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
        const auto m = static_cast<std::size_t>(rng.uniform(1, 3));
        const PolyhedralGauge x = random_gauge(rng, n, static_cast<Population>(t % 3));
        const PolyhedralGauge y = random_gauge(rng, m, static_cast<Population>((t / 3) % 3));
        const LinearOperator op(random_matrix(rng, m, n), x, y);
        const OpNormReport r = lc_norm(op);
        CHECK(r.lc_norm == oracle::vertex_operator_norm(op));
        CHECK(is_continuous(op).continuous == r.lc_norm.is_finite());
        if (r.lc_norm.is_finite())
            CHECK(ExtendedRational(r.ls_norm) <= r.lc_norm);
    }
}

TEST_CASE("operator inequalities over 300 random pairs")
{
    Rng rng(31);
    int with_index = 0;
    for (int t = 0; t < 300; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
        const auto m = static_cast<std::size_t>(rng.uniform(1, 3));
        const PolyhedralGauge x = random_gauge(rng, n, t % 4 == 0 ? Population::non_t1 : Population::unbiased);
        const PolyhedralGauge y = random_gauge(rng, m, static_cast<Population>(t % 3));
        const LinearOperator s = random_continuous_operator(rng, x, y);
        const LinearOperator u = random_continuous_operator(rng, x, y);
        REQUIRE(is_continuous(s).continuous);
        const OpNormReport rs = lc_norm(s);
        CHECK(ExtendedRational(rs.ls_norm) <= rs.lc_norm);
        CHECK(lc_norm(s + u).lc_norm <= rs.lc_norm + lc_norm(u).lc_norm);

        const Rational c = index(x).c;
        if (c == 0)
            continue;
        ++with_index;
        const Rational lc = rs.lc_norm.value();
        const ExtendedRational neg = lc_norm(-s).lc_norm;
        REQUIRE(neg.is_finite());
        CHECK(c * lc <= neg.value());
        CHECK(c * neg.value() <= lc);
        CHECK(c * lc <= rs.ls_norm);
    }
    CHECK(with_index > 100);
}

TEST_CASE("rank-one isometry on random functionals")
{
    Rng rng(17);
    for (int t = 0; t < 200; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
        const PolyhedralGauge x = random_gauge(rng, n, static_cast<Population>(t % 3));
        const PolyhedralGauge y = random_gauge(rng, static_cast<std::size_t>(rng.uniform(1, 3)), Population::non_t1);
        const Vec d = *is_t1(y).certificate;
        const Vec e = (Rational(1) / eval_reverse(y, d)) * (-d);
        const Vec p = random_point(rng, n);
        CHECK(lc_norm(rank_one(p, e, x, y)).lc_norm == flat_norm(x, p).value);
    }
}

TEST_CASE("vector-space decision with randomized reversibility check")
{
    const PolyhedralGauge x = referee_plane(), y = linf_sym(2);
    REQUIRE(lc_is_vector_space(x, y));
    Rng rng(23);
    for (int t = 0; t < 100; ++t) {
        const LinearOperator op = random_continuous_operator(rng, x, y);
        CHECK(is_continuous(op).continuous);
        CHECK(is_continuous(-op).continuous);
    }
}
