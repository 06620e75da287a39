#include <algorithm>
#include <limits>
#include <string>

#include "asym/errors.hpp"
#include "asym/polyhedra.hpp"

namespace asym {

HPolyhedron::HPolyhedron(std::size_t dim) : dim_(dim)
{
    if (dim == 0)
        throw InputError("polyhedron dimension must be positive");
}

HPolyhedron::HPolyhedron(std::size_t dim, std::vector<Row> rows) : HPolyhedron(dim)
{
    for (auto& r : rows)
        add_row(std::move(r.normal), std::move(r.bound));
}

void HPolyhedron::add_row(Vec normal, Rational bound)
{
    if (normal.size() != dim_)
        throw InputError("row normal has " + std::to_string(normal.size()) + " coordinates, expected " +
                         std::to_string(dim_));
    rows_.push_back({std::move(normal), std::move(bound)});
}

void HPolyhedron::add_equality(const Vec& normal, const Rational& value)
{
    add_row(normal, value);
    add_row(-normal, -value);
}

bool HPolyhedron::contains(const Vec& x) const
{
    return std::all_of(rows_.begin(), rows_.end(), [&](const Row& r) { return dot(r.normal, x) <= r.bound; });
}

bool HPolyhedron::in_recession_cone(const Vec& d) const
{
    return std::all_of(rows_.begin(), rows_.end(), [&](const Row& r) { return dot(r.normal, d) <= 0; });
}

namespace {

// Chvátal-style dictionary over nonnegative variables. Each free coordinate
// x_k is split as x_k⁺ − x_k⁻. Variable ids: x⁺ in [0, n), x⁻ in [n, 2n),
// slacks in [2n, 2n + m), the phase-one artificial is 2n + m.
class Dictionary
{
public:
    Dictionary(const HPolyhedron& poly, bool with_artificial)
        : n_(poly.dim()), m_(poly.rows().size())
    {
        for (std::size_t k = 0; k < 2 * n_; ++k)
            nonbasic_.push_back(k);
        if (with_artificial)
            nonbasic_.push_back(artificial());
        for (std::size_t i = 0; i < m_; ++i) {
            const auto& row = poly.rows()[i];
            basic_.push_back(2 * n_ + i);
            Vec d(nonbasic_.size() + 1);
            d[0] = row.bound;
            for (std::size_t k = 0; k < n_; ++k) {
                d[1 + k] = -row.normal[k];
                d[1 + n_ + k] = row.normal[k];
            }
            if (with_artificial)
                d[1 + 2 * n_] = 1;
            rows_.push_back(std::move(d));
        }
        obj_ = zeros(nonbasic_.size() + 1);
    }

    std::size_t artificial() const { return 2 * n_ + m_; }

    void set_objective_on_x(const Vec& c)
    {
        obj_ = zeros(nonbasic_.size() + 1);
        for (std::size_t k = 0; k < n_; ++k) {
            if (c[k] == 0)
                continue;
            add_variable_to_objective(k, c[k]);
            add_variable_to_objective(n_ + k, -c[k]);
        }
    }

    void set_objective_minimize_artificial()
    {
        obj_ = zeros(nonbasic_.size() + 1);
        add_variable_to_objective(artificial(), Rational(-1));
    }

    // Row index with the most negative constant term (lowest basic id on ties),
    // or nullopt if the basic solution is feasible.
    std::optional<std::size_t> most_infeasible_row() const
    {
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i][0] >= 0)
                continue;
            if (!best || rows_[i][0] < rows_[*best][0] ||
                (rows_[i][0] == rows_[*best][0] && basic_[i] < basic_[*best]))
                best = i;
        }
        return best;
    }

    std::size_t column_of(std::size_t var) const
    {
        return static_cast<std::size_t>(std::find(nonbasic_.begin(), nonbasic_.end(), var) - nonbasic_.begin());
    }

    void pivot(std::size_t r, std::size_t e)
    {
        Vec& prow = rows_[r];
        const Rational piv = prow[1 + e];
        // Solve the pivot row for the entering variable.
        for (std::size_t j = 0; j < prow.size(); ++j) {
            if (j == 1 + e)
                prow[j] = Rational(1) / piv;
            else if (prow[j] != 0)
                prow[j] = -prow[j] / piv;
        }
        auto substitute = [&](Vec& row) {
            const Rational coef = row[1 + e];
            if (coef == 0)
                return;
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (j == 1 + e)
                    row[j] = coef * prow[j];
                else if (prow[j] != 0)
                    row[j] += coef * prow[j];
            }
        };
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (i != r)
                substitute(rows_[i]);
        substitute(obj_);
        std::swap(basic_[r], nonbasic_[e]);
    }

    enum class Outcome { optimal, unbounded };

    // Maximizes the current objective. On unboundedness, `entering` holds the
    // column along which the objective grows without bound.
    Outcome run(std::size_t& entering)
    {
        for (;;) {
            std::optional<std::size_t> e;
            for (std::size_t j = 0; j < nonbasic_.size(); ++j)
                if (obj_[1 + j] > 0 && (!e || nonbasic_[j] < nonbasic_[*e]))
                    e = j;
            if (!e)
                return Outcome::optimal;
            std::optional<std::size_t> leave;
            Rational best_ratio;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const Rational& a = rows_[i][1 + *e];
                if (a >= 0)
                    continue;
                Rational ratio = rows_[i][0] / -a;
                if (!leave || ratio < best_ratio || (ratio == best_ratio && basic_[i] < basic_[*leave])) {
                    leave = i;
                    best_ratio = std::move(ratio);
                }
            }
            if (!leave) {
                entering = *e;
                return Outcome::unbounded;
            }
            pivot(*leave, *e);
        }
    }

    // Removes the artificial variable after a successful phase one.
    void drop_artificial()
    {
        const std::size_t a = artificial();
        auto it = std::find(basic_.begin(), basic_.end(), a);
        if (it != basic_.end()) {
            const std::size_t r = static_cast<std::size_t>(it - basic_.begin());
            std::optional<std::size_t> e;
            for (std::size_t j = 0; j < nonbasic_.size(); ++j)
                if (rows_[r][1 + j] != 0 && (!e || nonbasic_[j] < nonbasic_[*e]))
                    e = j;
            if (e) {
                pivot(r, *e);
            } else {
                // Identically zero row: the artificial is fixed at 0.
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
                basic_.erase(basic_.begin() + static_cast<std::ptrdiff_t>(r));
                return;
            }
        }
        const std::size_t col = column_of(a);
        nonbasic_.erase(nonbasic_.begin() + static_cast<std::ptrdiff_t>(col));
        for (auto& row : rows_)
            row.erase(row.begin() + static_cast<std::ptrdiff_t>(1 + col));
        obj_.erase(obj_.begin() + static_cast<std::ptrdiff_t>(1 + col));
    }

    const Rational& objective_value() const { return obj_[0]; }

    Vec point() const
    {
        Vec x = zeros(n_);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const std::size_t v = basic_[i];
            if (v < n_)
                x[v] += rows_[i][0];
            else if (v < 2 * n_)
                x[v - n_] -= rows_[i][0];
        }
        return x;
    }

    Vec ray(std::size_t e) const
    {
        Vec d = zeros(n_);
        auto accumulate = [&](std::size_t v, const Rational& rate) {
            if (v < n_)
                d[v] += rate;
            else if (v < 2 * n_)
                d[v - n_] -= rate;
        };
        accumulate(nonbasic_[e], Rational(1));
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i][1 + e] != 0)
                accumulate(basic_[i], rows_[i][1 + e]);
        return d;
    }

private:
    void add_variable_to_objective(std::size_t var, const Rational& coef)
    {
        auto b = std::find(basic_.begin(), basic_.end(), var);
        if (b == basic_.end()) {
            obj_[1 + column_of(var)] += coef;
            return;
        }
        const Vec& row = rows_[static_cast<std::size_t>(b - basic_.begin())];
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0)
                obj_[j] += coef * row[j];
    }

    std::size_t n_;
    std::size_t m_;
    std::vector<std::size_t> basic_;
    std::vector<std::size_t> nonbasic_;
    Matrix rows_;  // rows_[i] = [constant, coefficients over nonbasic_]
    Vec obj_;
};

void check_dimensions(const Vec& objective, const HPolyhedron& poly)
{
    if (objective.size() != poly.dim())
        throw InputError("objective has " + std::to_string(objective.size()) + " coordinates, polyhedron has dimension " +
                         std::to_string(poly.dim()));
}

} // namespace

LpOutcome lp_solve(const Vec& objective, Sense sense, const HPolyhedron& poly)
{
    check_dimensions(objective, poly);
    const Vec c = sense == Sense::maximize ? objective : -objective;

    const auto& rows = poly.rows();
    const bool feasible_origin =
        std::all_of(rows.begin(), rows.end(), [](const HPolyhedron::Row& r) { return r.bound >= 0; });

    Dictionary dict(poly, !feasible_origin);
    if (!feasible_origin) {
        dict.set_objective_minimize_artificial();
        const auto r = dict.most_infeasible_row();
        dict.pivot(*r, dict.column_of(dict.artificial()));
        std::size_t unused = 0;
        if (dict.run(unused) != Dictionary::Outcome::optimal)
            throw InvariantViolation("phase one of the simplex method reported unboundedness");
        if (dict.objective_value() < 0)
            return LpOutcome{LpStatus::infeasible, {}, {}, {}};
        dict.drop_artificial();
    }

    dict.set_objective_on_x(c);
    std::size_t entering = 0;
    LpOutcome out;
    if (dict.run(entering) == Dictionary::Outcome::unbounded) {
        out.status = LpStatus::unbounded;
        out.ray = primitive_integer(dict.ray(entering));
        if (!poly.in_recession_cone(out.ray) || dot(c, out.ray) <= 0)
            throw InvariantViolation("simplex produced an invalid unboundedness ray");
        return out;
    }
    out.status = LpStatus::optimal;
    out.point = dict.point();
    out.value = dot(objective, out.point);
    if (!poly.contains(out.point))
        throw InvariantViolation("simplex optimum violates a constraint");
    const Rational expected = sense == Sense::maximize ? dict.objective_value() : Rational(-dict.objective_value());
    if (out.value != expected)
        throw InvariantViolation("simplex objective value does not match its point");
    return out;
}

SupportResult support_value(const HPolyhedron& poly, const Vec& p)
{
    const LpOutcome lp = lp_solve(p, Sense::maximize, poly);
    switch (lp.status) {
    case LpStatus::infeasible:
        throw InputError("support value of an empty polyhedron");
    case LpStatus::unbounded:
        return {ExtendedRational::infinity(), {Certificate::Kind::ray, lp.ray}};
    case LpStatus::optimal:
        break;
    }
    return {ExtendedRational(lp.value), {Certificate::Kind::point, lp.point}};
}

std::optional<Vec> recession_direction(const HPolyhedron& poly)
{
    HPolyhedron cone(poly.dim());
    for (const auto& r : poly.rows())
        cone.add_row(r.normal, Rational(0));
    // The cone is nontrivial iff some ±coordinate is unbounded on it.
    for (std::size_t k = 0; k < poly.dim(); ++k) {
        for (int sign : {1, -1}) {
            Vec c = zeros(poly.dim());
            c[k] = sign;
            const LpOutcome lp = lp_solve(c, Sense::maximize, cone);
            if (lp.status == LpStatus::unbounded)
                return lp.ray;
        }
    }
    return std::nullopt;
}

bool positively_spans(const std::vector<Vec>& vectors)
{
    if (vectors.empty())
        throw InputError("positively_spans needs a nonempty list");
    HPolyhedron cone(vectors.front().size());
    for (const auto& v : vectors)
        cone.add_row(v, Rational(0));
    return !recession_direction(cone).has_value();
}

} // namespace asym
