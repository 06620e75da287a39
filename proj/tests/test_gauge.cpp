#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asym/errors.hpp"
#include "asym/gauge.hpp"
#include "asym/random.hpp"

using namespace asym;

namespace {

Rational q(long p, long d = 1) { return Rational(p) / Rational(d); }

Vec v1(long x) { return {q(x)}; }
Vec v2(long x, long y) { return {q(x), q(y)}; }

} // namespace

TEST_CASE("construction validates both axioms")
{
    CHECK_NOTHROW(PolyhedralGauge(1, {v1(0), v1(1)}));

    try {
        PolyhedralGauge(1, {v1(1)});
        FAIL("expected a nonnegativity failure");
    } catch (const AxiomError& e) {
        CHECK(e.axiom() == AxiomError::Axiom::nonnegativity);
        CHECK(std::string(e.what()).find("not nonnegative") != std::string::npos);
    }

    try {
        PolyhedralGauge(2, {v2(1, 0), v2(-1, 0)});
        FAIL("expected a separation failure");
    } catch (const AxiomError& e) {
        CHECK(e.axiom() == AxiomError::Axiom::separation);
        CHECK(std::string(e.what()).find("degenerate") != std::string::npos);
    }

    CHECK_THROWS_AS(PolyhedralGauge(0, {}), InputError);
    CHECK_THROWS_AS(PolyhedralGauge(2, {}), InputError);
    CHECK_THROWS_AS(PolyhedralGauge(2, {v2(1, 0), v1(0)}), InputError);
}

TEST_CASE("eval_norm examples")
{
    CHECK(eval_norm(upper_real(), v1(3)) == 3);
    CHECK(eval_norm(upper_real(), v1(-2)) == 0);
    CHECK(eval_norm(referee_plane(), v2(0, -1)) == 0);
    CHECK(eval_norm(referee_plane(), v2(2, 0)) == 2);
    CHECK_THROWS_AS(eval_norm(upper_real(), v2(1, 1)), InputError);
}

TEST_CASE("eval_reverse examples")
{
    CHECK(eval_reverse(upper_real(), v1(3)) == 0);
    CHECK(eval_reverse(weighted_linf(3), {q(0), q(0), q(1)}) == q(1, 3));
    CHECK(eval_reverse(referee_plane(), v2(0, 1)) == 0);
}

TEST_CASE("symmetric_norm examples")
{
    CHECK(symmetric_norm(upper_real(), v1(-2)) == 2);
    CHECK(symmetric_norm(weighted_linf(3), {q(0), q(0), q(1)}) == 1);
    const PolyhedralGauge l = linf_sym(2);
    CHECK(symmetric_norm(l, v2(3, -5)) == eval_norm(l, v2(3, -5)));
}

TEST_CASE("symmetrize")
{
    const PolyhedralGauge s = symmetrize(upper_real());
    CHECK(s.generators() == std::vector<Vec>{v1(0), v1(1), v1(0), v1(-1)});
    CHECK(eval_norm(s, v1(-4)) == 4);

    const PolyhedralGauge r = symmetrize(referee_plane());
    for (long x = -3; x <= 3; ++x)
        for (long y = -3; y <= 3; ++y)
            CHECK(eval_norm(r, v2(x, y)) == std::max(std::abs(x), std::abs(y)));
}

TEST_CASE("sum_with_symmetric on the upper real line")
{
    const PolyhedralGauge h = sum_with_symmetric(upper_real());
    CHECK(eval_norm(h, {q(1, 2)}) == 1);
    CHECK(eval_norm(h, v1(-1)) == 1);
    for (long t = -5; t <= 5; ++t)
        CHECK(eval_norm(h, v1(t)) == std::max(-t, 2 * t));
}

TEST_CASE("unit_ball rows")
{
    const HPolyhedron b = unit_ball(referee_plane());
    REQUIRE(b.rows().size() == 3);
    for (const auto& row : b.rows())
        CHECK(row.bound == 1);
    CHECK(b.rows()[2].normal == v2(0, 1));
    CHECK(b.contains(v2(0, -100)));
    CHECK_FALSE(b.contains(v2(0, 2)));
}

TEST_CASE("canonicalize keeps the norm and drops redundancy")
{
    const PolyhedralGauge g(2, {v2(1, 0), v2(1, 0), v2(-1, 0), v2(0, 1), v2(0, -1), {q(1, 2), q(1, 2)}, v2(0, 0)});
    const PolyhedralGauge c = canonicalize(g);
    CHECK(c.generators().size() == 4);

    const PolyhedralGauge h = canonicalize(PolyhedralGauge(1, {v1(0), v1(2), v1(1)}));
    CHECK(h.generators() == std::vector<Vec>{v1(2), v1(0)});

    Rng rng(3);
    for (int t = 0; t < 200; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
        const PolyhedralGauge r = random_gauge(rng, n, static_cast<Population>(t % 3));
        const PolyhedralGauge rc = canonicalize(r);
        CHECK(rc.generators().size() <= r.generators().size());
        for (int s = 0; s < 5; ++s) {
            const Vec x = random_point(rng, n);
            CHECK(eval_norm(rc, x) == eval_norm(r, x));
        }
    }
}

TEST_CASE("fixtures")
{
    CHECK(eval_norm(weighted_linf(3), {q(0), q(0), q(1)}) == 1);
    CHECK(weighted_linf(2).generators() == std::vector<Vec>{v2(1, 0), v2(0, 1), v2(-1, 0), {q(0), q(-1, 2)}});

    // The pinned grid of 5 points keeps 4 free coordinates.
    CHECK(sup_gauge(5).dim() == 4);
    CHECK_THROWS_AS(sup_gauge(4), InputError);
    const PolyhedralGauge z = sup_gauge(4, SupGrid::zero_augmented);
    CHECK(z.dim() == 4);
    CHECK(eval_norm(z, {q(-1), q(-1), q(-1), q(-1)}) == 0);
    CHECK(eval_norm(z, {q(-1), q(3), q(-1), q(2)}) == 3);
    CHECK(z.generators() == sup_gauge(5).generators());

    CHECK(linf_sym(3).generators().size() == 6);
    CHECK_THROWS_AS(weighted_linf(0), InputError);
    CHECK_THROWS_AS(linf_sym(0), InputError);

    CHECK(fixture("upper_real") == upper_real());
    CHECK(fixture("referee_plane") == referee_plane());
    CHECK(fixture("weighted_linf:4") == weighted_linf(4));
    CHECK(fixture("sup_gauge:3") == sup_gauge(3));
    CHECK(fixture("linf_sym:2") == linf_sym(2));
    for (const char* bad : {"nope", "weighted_linf", "weighted_linf:0", "weighted_linf:x", "linf_sym:-1", ""})
        CHECK_THROWS_AS(fixture(bad), InputError);
}

TEST_CASE("active generator is the lowest attaining index")
{
    const PolyhedralGauge g = referee_plane();
    CHECK(g.active_generator(v2(1, 1)) == 0);
    CHECK(g.active_generator(v2(0, 1)) == 2);
    CHECK(g.active_generator(v2(0, 0)) == 0);
}

TEST_CASE("random gauges: axioms and identities over 1000 cases")
{
    Rng rng(2024);
    for (int t = 0; t < 1000; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
        const PolyhedralGauge g = random_gauge(rng, n, static_cast<Population>(t % 3));
        const PolyhedralGauge sum = sum_with_symmetric(g);
        const Vec x = random_point(rng, n), y = random_point(rng, n);
        const Rational lambda = abs(rng.rational(9, 4));

        CHECK(eval_norm(g, x) >= 0);
        CHECK(eval_norm(g, x + y) <= eval_norm(g, x) + eval_norm(g, y));
        CHECK(eval_norm(g, lambda * x) == lambda * eval_norm(g, x));
        CHECK(eval_norm(g, x) <= symmetric_norm(g, x));
        CHECK(symmetric_norm(g, x) == symmetric_norm(g, -x));
        CHECK(symmetric_norm(g, x + y) <= symmetric_norm(g, x) + symmetric_norm(g, y));
        CHECK(eval_norm(symmetrize(g), x) == symmetric_norm(g, x));
        CHECK(eval_norm(sum, x) == eval_norm(g, x) + symmetric_norm(g, x));
        if (!is_zero(x))
            CHECK(symmetric_norm(g, x) > 0);
    }
}

TEST_CASE("population samplers hit their targets")
{
    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
        const PolyhedralGauge s = random_gauge(rng, n, Population::symmetric);
        const Vec x = random_point(rng, n);
        CHECK(eval_norm(s, x) == eval_reverse(s, x));
        const PolyhedralGauge u = random_gauge(rng, n, Population::non_t1);
        CHECK(recession_direction(unit_ball(u)).has_value());
    }
}
