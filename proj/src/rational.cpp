#include "asym/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "asym/errors.hpp"

namespace asym {

const Rational& ExtendedRational::value() const
{
    if (!value_)
        throw std::logic_error("ExtendedRational::value() on +inf");
    return *value_;
}

ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b)
{
    if (a.is_infinite() || b.is_infinite())
        return ExtendedRational::infinity();
    return ExtendedRational(*a.value_ + *b.value_);
}

ExtendedRational operator*(const ExtendedRational& a, const Rational& s)
{
    if (s < 0)
        throw std::domain_error("ExtendedRational scaled by a negative factor");
    if (a.is_infinite())
        return s == 0 ? ExtendedRational(0) : ExtendedRational::infinity();
    return ExtendedRational(*a.value_ * s);
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b)
{
    if (a.is_infinite() || b.is_infinite())
        return a.is_infinite() && b.is_infinite();
    return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b)
{
    if (a.is_infinite() && b.is_infinite())
        return std::strong_ordering::equal;
    if (a.is_infinite())
        return std::strong_ordering::greater;
    if (b.is_infinite())
        return std::strong_ordering::less;
    if (*a.value_ < *b.value_)
        return std::strong_ordering::less;
    if (*a.value_ > *b.value_)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string ExtendedRational::to_string() const
{
    return value_ ? format_rational(*value_) : std::string("+inf");
}

ExtendedRational min(const ExtendedRational& a, const ExtendedRational& b) { return b < a ? b : a; }
ExtendedRational max(const ExtendedRational& a, const ExtendedRational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r) { return os << r.to_string(); }

Rational dot(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw InputError("dimension mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            s += a[i] * b[i];
    return s;
}

Vec operator+(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw InputError("dimension mismatch in vector sum");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw InputError("dimension mismatch in vector difference");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

Vec operator-(const Vec& a)
{
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

Vec operator*(const Rational& s, const Vec& a)
{
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = s * a[i];
    return r;
}

bool is_zero(const Vec& a)
{
    return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

Vec zeros(std::size_t n) { return Vec(n, Rational(0)); }

Vec unit_vector(std::size_t n, std::size_t k)
{
    Vec e = zeros(n);
    e.at(k) = 1;
    return e;
}

Vec primitive_integer(const Vec& a)
{
    if (is_zero(a))
        return a;
    Integer l = 1;
    for (const auto& x : a)
        l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(x)));
    std::vector<Integer> ints;
    ints.reserve(a.size());
    Integer g = 0;
    for (const auto& x : a) {
        Integer v = Integer(boost::multiprecision::numerator(x)) * (l / Integer(boost::multiprecision::denominator(x)));
        g = boost::multiprecision::gcd(g, v);
        ints.push_back(std::move(v));
    }
    g = abs(g);
    Vec r;
    r.reserve(a.size());
    for (auto& v : ints)
        r.emplace_back(Rational(v / g));
    return r;
}

std::size_t rank(const Matrix& rows)
{
    if (rows.empty())
        return 0;
    Matrix m = rows;
    const std::size_t ncols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.size() && m[pivot][c] == 0)
            ++pivot;
        if (pivot == m.size())
            continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == 0)
                continue;
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < ncols; ++j)
                m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

Vec mat_vec(const Matrix& m, const Vec& x)
{
    Vec r;
    r.reserve(m.size());
    for (const auto& row : m)
        r.push_back(dot(row, x));
    return r;
}

Vec mat_t_vec(const Matrix& m, const Vec& y)
{
    if (m.size() != y.size())
        throw InputError("dimension mismatch in transposed product");
    if (m.empty())
        return {};
    Vec r = zeros(m.front().size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (y[i] == 0)
            continue;
        for (std::size_t j = 0; j < r.size(); ++j)
            r[j] += y[i] * m[i][j];
    }
    return r;
}

std::string format_rational(const Rational& r)
{
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

std::string format_vec(const Vec& v)
{
    if (v.size() == 1)
        return format_rational(v.front());
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += format_rational(v[i]);
    }
    return s + ")";
}

std::string format_matrix(const Matrix& m)
{
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i)
            s += ", ";
        s += "[";
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            if (j)
                s += ", ";
            s += format_rational(m[i][j]);
        }
        s += "]";
    }
    return s + "]";
}

namespace {

bool all_digits(const std::string& s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

std::optional<Rational> parse_rational(const std::string& text)
{
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s.erase(0, 1);
    }
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        return std::nullopt;
    const Integer d(den);
    if (d == 0)
        return std::nullopt;
    Rational r(Integer(num), d);
    return negative ? Rational(-r) : r;
}

} // namespace asym
