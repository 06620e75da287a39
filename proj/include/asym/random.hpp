#pragma once

#include <cstdint>
#include <random>

#include "asym/gauge.hpp"
#include "asym/operators.hpp"

namespace asym {

/// splitmix64 finalizer of seed ⊕ stream; derives independent per-case seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// mt19937_64 with its own bounded draws, so sequences match across standard libraries.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform on [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    /// True with probability num/den.
    bool chance(std::int64_t num, std::int64_t den);
    /// p/q with p ∈ [−max_num, max_num], q ∈ [1, max_den].
    Rational rational(std::int64_t max_num, std::int64_t max_den);

private:
    std::mt19937_64 engine_;
};

enum class Population { unbiased, symmetric, non_t1 };

/// k ∈ [n+1, 3n] integer generators with entries in [−5, 5], resampled until valid.
PolyhedralGauge random_gauge(Rng& rng, std::size_t n, Population population = Population::unbiased);

Vec random_point(Rng& rng, std::size_t n);

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);

/// Rejection-sampled continuous operator; the zero operator if every draw fails.
LinearOperator random_continuous_operator(Rng& rng, const PolyhedralGauge& domain, const PolyhedralGauge& codomain);

} // namespace asym
