#include "asym/random.hpp"

#include <limits>

#include "asym/errors.hpp"

namespace asym {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t z = seed ^ (stream * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi)
{
    const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0)
        return static_cast<std::int64_t>(next());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t draw;
    do {
        draw = next();
    } while (draw >= limit);
    return lo + static_cast<std::int64_t>(draw % range);
}

bool Rng::chance(std::int64_t num, std::int64_t den) { return uniform(0, den - 1) < num; }

Rational Rng::rational(std::int64_t max_num, std::int64_t max_den)
{
    const std::int64_t p = uniform(-max_num, max_num);
    const std::int64_t q = uniform(1, max_den);
    return Rational(p) / Rational(q);
}

namespace {

Vec integer_vector(Rng& rng, std::size_t n, std::int64_t bound)
{
    Vec v(n);
    for (auto& x : v)
        x = Rational(rng.uniform(-bound, bound));
    return v;
}

std::vector<Vec> draw_generators(Rng& rng, std::size_t n, Population population)
{
    const auto k = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(n) + 1, 3 * static_cast<std::int64_t>(n)));
    std::vector<Vec> gens;
    switch (population) {
    case Population::unbiased:
        for (std::size_t i = 0; i < k; ++i)
            gens.push_back(integer_vector(rng, n, 5));
        break;
    case Population::symmetric:
        for (std::size_t i = 0; i < (k + 1) / 2; ++i) {
            Vec a = integer_vector(rng, n, 5);
            gens.push_back(-a);
            gens.push_back(std::move(a));
        }
        break;
    case Population::non_t1: {
        // Everything in {⟨a, d⟩ ≤ 0}, so d is a recession direction of the ball.
        Vec d;
        do {
            d = integer_vector(rng, n, 3);
        } while (is_zero(d));
        const Rational dd = dot(d, d);
        if (rng.chance(1, 2))
            gens.push_back(zeros(n));
        while (gens.size() < k) {
            Vec a = integer_vector(rng, n, 5);
            const Rational ad = dot(a, d);
            if (ad <= 0 && rng.chance(2, 3)) {
                gens.push_back(std::move(a));
            } else {
                // Projection onto d⊥, kept with its negative so 0 stays in the hull.
                Vec h = primitive_integer(dd * a - ad * d);
                if (is_zero(h))
                    continue;
                gens.push_back(-h);
                gens.push_back(std::move(h));
            }
        }
        break;
    }
    }
    return gens;
}

} // namespace

PolyhedralGauge random_gauge(Rng& rng, std::size_t n, Population population)
{
    if (n == 0)
        throw InputError("random gauge dimension must be positive");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<Vec> gens = draw_generators(rng, n, population);
        try {
            return PolyhedralGauge(n, std::move(gens), "random");
        } catch (const AxiomError&) {
        }
    }
    throw InvariantViolation("random gauge sampler exhausted its attempts");
}

Vec random_point(Rng& rng, std::size_t n)
{
    Vec v(n);
    for (auto& x : v)
        x = rng.rational(10, 4);
    return v;
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols)
{
    Matrix m(rows, Vec(cols));
    for (auto& row : m)
        for (auto& x : row)
            x = rng.rational(6, 2);
    return m;
}

LinearOperator random_continuous_operator(Rng& rng, const PolyhedralGauge& domain, const PolyhedralGauge& codomain)
{
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Matrix m = random_matrix(rng, codomain.dim(), domain.dim());
        for (std::size_t c = 0; c < domain.dim(); ++c) {
            const bool drop_column = rng.chance(1, 3);
            for (auto& row : m)
                if (drop_column || rng.chance(1, 4))
                    row[c] = 0;
        }
        LinearOperator t(std::move(m), domain, codomain);
        if (is_continuous(t).continuous)
            return t;
    }
    return LinearOperator(domain, codomain);
}

} // namespace asym
