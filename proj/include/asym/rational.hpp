#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace asym {

/// Exact rational scalar. GMP keeps every value reduced with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using Vec = std::vector<Rational>;
/// Row-major dense matrix; every row has the same length.
using Matrix = std::vector<Vec>;

/**
 * A rational number or +inf.
 *
 * Suprema over unbounded unit balls diverge; this type carries that outcome
 * through exact comparisons and sums (finite + inf = inf, min(inf, r) = r).
 */
class ExtendedRational
{
public:
    ExtendedRational() = default;
    ExtendedRational(Rational value) : value_(std::move(value)) {}
    ExtendedRational(long value) : value_(Rational(value)) {}

    static ExtendedRational infinity()
    {
        ExtendedRational r;
        r.value_.reset();
        return r;
    }

    bool is_finite() const noexcept { return value_.has_value(); }
    bool is_infinite() const noexcept { return !value_.has_value(); }

    /// Throws std::logic_error when infinite.
    const Rational& value() const;

    friend ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b);
    friend ExtendedRational operator*(const ExtendedRational& a, const Rational& s);

    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
    friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

    /// "p/q", "p" for integers, "+inf" for divergence.
    std::string to_string() const;

private:
    std::optional<Rational> value_{Rational(0)};
};

ExtendedRational min(const ExtendedRational& a, const ExtendedRational& b);
ExtendedRational max(const ExtendedRational& a, const ExtendedRational& b);

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r);

// ---------------------------------------------------------------------------
// Vector helpers

Rational dot(const Vec& a, const Vec& b);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Rational& s, const Vec& a);
bool is_zero(const Vec& a);

Vec zeros(std::size_t n);
Vec unit_vector(std::size_t n, std::size_t k);

/// Scales a nonzero vector by a positive factor so that its coordinates are
/// coprime integers. The zero vector is returned unchanged.
Vec primitive_integer(const Vec& a);

/// Rank over Q by fraction-exact Gaussian elimination.
std::size_t rank(const Matrix& rows);

Vec mat_vec(const Matrix& m, const Vec& x);
/// mᵀ·y
Vec mat_t_vec(const Matrix& m, const Vec& y);

// ---------------------------------------------------------------------------
// Text form

/// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& r);
/// "-1" for a single coordinate, "(a, b, ...)" otherwise.
std::string format_vec(const Vec& v);
/// "[[a, b], [c, d]]"
std::string format_matrix(const Matrix& m);

/// Strict parser: optional sign, decimal digits, optional "/digits" with a
/// nonzero denominator. Returns nullopt on anything else.
std::optional<Rational> parse_rational(const std::string& text);

} // namespace asym
