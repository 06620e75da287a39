#include "asym/operators.hpp"

#include <algorithm>

#include "asym/errors.hpp"
#include "asym/symmetry.hpp"

namespace asym {

LinearOperator::LinearOperator(Matrix matrix, PolyhedralGauge domain, PolyhedralGauge codomain)
    : matrix_(std::move(matrix)), domain_(std::move(domain)), codomain_(std::move(codomain))
{
    if (matrix_.size() != codomain_.dim())
        throw InputError("operator matrix has " + std::to_string(matrix_.size()) + " rows, codomain has dimension " +
                         std::to_string(codomain_.dim()));
    for (std::size_t i = 0; i < matrix_.size(); ++i)
        if (matrix_[i].size() != domain_.dim())
            throw InputError("operator matrix row " + std::to_string(i) + " has " +
                             std::to_string(matrix_[i].size()) + " entries, domain has dimension " +
                             std::to_string(domain_.dim()));
}

LinearOperator::LinearOperator(PolyhedralGauge domain, PolyhedralGauge codomain)
    : LinearOperator(Matrix(codomain.dim(), zeros(domain.dim())), domain, codomain)
{
}

Vec LinearOperator::apply(const Vec& x) const { return mat_vec(matrix_, x); }

LinearOperator LinearOperator::operator-() const { return scaled(Rational(-1)); }

LinearOperator LinearOperator::operator+(const LinearOperator& other) const
{
    if (!(domain_ == other.domain_) || !(codomain_ == other.codomain_))
        throw InputError("operator sum needs identical domain and codomain");
    Matrix m = matrix_;
    for (std::size_t i = 0; i < m.size(); ++i)
        m[i] = m[i] + other.matrix_[i];
    return LinearOperator(std::move(m), domain_, codomain_);
}

LinearOperator LinearOperator::scaled(const Rational& s) const
{
    Matrix m = matrix_;
    for (auto& row : m)
        row = s * row;
    return LinearOperator(std::move(m), domain_, codomain_);
}

namespace {

struct NormAndCertificate {
    ExtendedRational value;
    Certificate certificate;
};

NormAndCertificate operator_norm(const Matrix& m, const PolyhedralGauge& domain, const PolyhedralGauge& codomain)
{
    const HPolyhedron ball = unit_ball(domain);
    NormAndCertificate best{ExtendedRational(0), {Certificate::Kind::point, zeros(domain.dim())}};
    for (const auto& b : codomain.generators()) {
        const Vec pulled_back = mat_t_vec(m, b);
        if (is_zero(pulled_back))
            continue;
        SupportResult s = support_value(ball, pulled_back);
        if (s.value.is_infinite())
            return {s.value, std::move(s.certificate)};
        if (s.value > best.value)
            best = {s.value, std::move(s.certificate)};
    }
    return best;
}

} // namespace

Rational ls_norm(const LinearOperator& t)
{
    const auto r = operator_norm(t.matrix(), symmetrize(t.domain()), symmetrize(t.codomain()));
    if (r.value.is_infinite())
        throw InvariantViolation("symmetric operator norm diverged");
    return r.value.value();
}

OpNormReport lc_norm(const LinearOperator& t)
{
    auto r = operator_norm(t.matrix(), t.domain(), t.codomain());
    const Vec& x = r.certificate.coords;
    if (r.value.is_infinite()) {
        if (eval_norm(t.domain(), x) != 0 || eval_norm(t.codomain(), t.apply(x)) <= 0)
            throw InvariantViolation("discontinuity ray does not re-verify");
    } else if (eval_norm(t.domain(), x) > 1 || eval_norm(t.codomain(), t.apply(x)) != r.value.value()) {
        throw InvariantViolation("operator norm maximizer does not re-verify");
    }
    OpNormReport report{r.value, std::move(r.certificate), ls_norm(t)};
    if (report.lc_norm.is_finite() && report.ls_norm > report.lc_norm.value())
        throw InvariantViolation("symmetric operator norm exceeds the asymmetric one");
    return report;
}

Continuity is_continuous(const LinearOperator& t)
{
    const auto r = operator_norm(t.matrix(), t.domain(), t.codomain());
    if (r.value.is_finite())
        return {};
    return {false, r.certificate.coords};
}

LinearOperator rank_one(const Vec& p, const Vec& e, const PolyhedralGauge& domain, const PolyhedralGauge& codomain)
{
    if (p.size() != domain.dim() || e.size() != codomain.dim())
        throw InputError("rank-one operator: dimension mismatch");
    if (eval_norm(codomain, e) != 1 || eval_reverse(codomain, e) != 0)
        throw InputError("rank-one embedding needs ‖e|_Y = 1 and ‖−e|_Y = 0 (Y not T1 along e)");
    Matrix m(codomain.dim(), zeros(domain.dim()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            m[i][j] = e[i] * p[j];
    LinearOperator t(std::move(m), domain, codomain);
    if (lc_norm(t).lc_norm != flat_norm(domain, p).value)
        throw InvariantViolation("rank-one embedding is not isometric");
    return t;
}

bool lc_is_vector_space(const PolyhedralGauge& domain, const PolyhedralGauge& codomain)
{
    return !(index(domain).c == 0 && index(codomain).c == 0);
}

namespace {

// e with ‖e|_Y = 1 and ‖−e|_Y = 0, from the non-T1 certificate of Y.
Vec unit_non_t1_direction(const PolyhedralGauge& y)
{
    const T1Result t1 = is_t1(y);
    if (t1.t1)
        throw PreconditionError("witness hypotheses not met: the codomain is T1");
    const Vec& d = *t1.certificate;
    return (Rational(1) / eval_reverse(y, d)) * (-d);
}

void require_zero_index(const PolyhedralGauge& x)
{
    const Rational c = index(x).c;
    if (c != 0)
        throw PreconditionError("witness hypotheses not met: c(X) = " + format_rational(c) + " > 0");
}

} // namespace

Witness nonreversible_witness(const PolyhedralGauge& domain, const PolyhedralGauge& codomain)
{
    require_zero_index(domain);
    const Vec e = unit_non_t1_direction(codomain);
    const T1Result tx = is_t1(domain);
    if (tx.t1)
        throw InvariantViolation("c(X) = 0 on a T1 space in finite dimension");
    const Vec& d = *tx.certificate;
    const Vec a = (Rational(1) / eval_reverse(domain, d)) * (-d);
    const DualFunctional p = support_functional(domain, a);
    LinearOperator t = rank_one(p.p, e, domain, codomain);

    if (!is_continuous(t).continuous)
        throw InvariantViolation("witness operator is not continuous");
    const Continuity neg = is_continuous(-t);
    if (neg.continuous)
        throw InvariantViolation("negated witness operator is continuous");
    return Witness{std::move(t), p.p, e, *neg.ray};
}

Perturbation perturb_nonsymmetric(const LinearOperator& h, const Rational& epsilon)
{
    if (epsilon <= 0)
        throw PreconditionError("perturbation size must be positive");
    if (!is_continuous(h).continuous)
        throw PreconditionError("the operator to perturb must be continuous");
    const Witness w = nonreversible_witness(h.domain(), h.codomain());
    LinearOperator t = w.op.scaled(epsilon);
    LinearOperator sum = h + t;

    const OpNormReport tn = lc_norm(t);
    if (tn.lc_norm > ExtendedRational(epsilon))
        throw InvariantViolation("perturbation exceeds epsilon");
    if (!is_continuous(sum).continuous)
        throw InvariantViolation("perturbed operator is not continuous");
    const Continuity neg = is_continuous(-sum);
    if (neg.continuous)
        throw InvariantViolation("negated perturbed operator is continuous");
    return Perturbation{std::move(t), std::move(sum), *neg.ray};
}

Vec flatten(const Matrix& m)
{
    Vec v;
    for (const auto& row : m)
        v.insert(v.end(), row.begin(), row.end());
    return v;
}

PolyhedralGauge operator_space_gauge(const PolyhedralGauge& domain, const PolyhedralGauge& codomain,
                                     const VRepLimits& limits)
{
    const Rational c = index(domain).c;
    if (c == 0)
        throw PreconditionError("operator-space gauge needs c(X) > 0: the domain ball is unbounded");
    const VRep v = enumerate_vrep(unit_ball(domain), limits);
    if (!v.rays.empty())
        throw InvariantViolation("c(X) > 0 but the domain ball has recession rays");

    const std::size_t m = codomain.dim();
    const std::size_t n = domain.dim();
    std::vector<Vec> gens;
    for (const auto& b : codomain.generators()) {
        for (const auto& vertex : v.vertices) {
            Vec g(m * n);
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t col = 0; col < n; ++col)
                    g[r * n + col] = b[r] * vertex[col];
            if (std::find(gens.begin(), gens.end(), g) == gens.end())
                gens.push_back(std::move(g));
        }
    }
    std::string label = "Lc(" + domain.label() + ", " + codomain.label() + ")";
    return PolyhedralGauge(m * n, std::move(gens), std::move(label));
}

} // namespace asym
