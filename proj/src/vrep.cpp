#include <algorithm>
#include <string>

#include "asym/errors.hpp"
#include "asym/polyhedra.hpp"

namespace asym {

namespace {

bool lex_less(const Vec& a, const Vec& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Gauss-Jordan inverse of a nonsingular square matrix.
Matrix inverse(Matrix m)
{
    const std::size_t d = m.size();
    Matrix inv(d, zeros(d));
    for (std::size_t i = 0; i < d; ++i)
        inv[i][i] = 1;
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t p = c;
        while (p < d && m[p][c] == 0)
            ++p;
        if (p == d)
            throw InvariantViolation("singular initial basis in double description");
        std::swap(m[c], m[p]);
        std::swap(inv[c], inv[p]);
        const Rational piv = m[c][c];
        for (std::size_t j = 0; j < d; ++j) {
            m[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t i = 0; i < d; ++i) {
            if (i == c || m[i][c] == 0)
                continue;
            const Rational f = m[i][c];
            for (std::size_t j = 0; j < d; ++j) {
                m[i][j] -= f * m[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

struct ConeRay {
    Vec y;
    std::vector<bool> tight;  // per processed constraint
};

} // namespace

VRep enumerate_vrep(const HPolyhedron& poly, const VRepLimits& limits)
{
    const std::size_t n = poly.dim();
    if (n > limits.max_dim)
        throw CapacityError("vertex enumeration capped at dimension " + std::to_string(limits.max_dim) + ", got " +
                            std::to_string(n));
    if (poly.rows().size() > limits.max_rows)
        throw CapacityError("vertex enumeration capped at " + std::to_string(limits.max_rows) + " rows, got " +
                            std::to_string(poly.rows().size()));

    // Homogenized constraints h·(x, t) ≤ 0; the last one is t ≥ 0.
    const std::size_t d = n + 1;
    Matrix h;
    for (const auto& r : poly.rows()) {
        Vec row = r.normal;
        row.push_back(-r.bound);
        h.push_back(std::move(row));
    }
    Vec t_nonneg = zeros(d);
    t_nonneg[n] = -1;
    h.push_back(t_nonneg);

    if (rank(h) < d)
        throw InputError("vertex enumeration needs a pointed polyhedron (row normals must span the space)");

    // Greedy independent subset for the initial simplicial cone, starting with t ≥ 0.
    std::vector<std::size_t> order{h.size() - 1};
    {
        Matrix chosen{h.back()};
        for (std::size_t i = 0; i + 1 < h.size() && chosen.size() < d; ++i) {
            chosen.push_back(h[i]);
            if (rank(chosen) == chosen.size())
                order.push_back(i);
            else
                chosen.pop_back();
        }
    }
    std::vector<bool> used(h.size(), false);
    for (auto i : order)
        used[i] = true;
    for (std::size_t i = 0; i < h.size(); ++i)
        if (!used[i])
            order.push_back(i);

    Matrix basis;
    for (std::size_t k = 0; k < d; ++k)
        basis.push_back(h[order[k]]);
    const Matrix inv = inverse(basis);

    std::vector<ConeRay> rays;
    for (std::size_t j = 0; j < d; ++j) {
        Vec y(d);
        for (std::size_t i = 0; i < d; ++i)
            y[i] = -inv[i][j];
        ConeRay r{primitive_integer(y), std::vector<bool>(d, true)};
        r.tight[j] = false;
        rays.push_back(std::move(r));
    }

    for (std::size_t step = d; step < order.size(); ++step) {
        const Vec& row = h[order[step]];
        std::vector<Rational> val;
        val.reserve(rays.size());
        for (const auto& r : rays)
            val.push_back(dot(row, r.y));

        std::vector<ConeRay> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (val[i] > 0)
                continue;
            ConeRay r = rays[i];
            r.tight.push_back(val[i] == 0);
            next.push_back(std::move(r));
        }
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (val[p] <= 0)
                continue;
            for (std::size_t q = 0; q < rays.size(); ++q) {
                if (val[q] >= 0)
                    continue;
                // Adjacent iff the constraints tight on both have rank d − 2.
                Matrix common;
                std::vector<bool> tight(step + 1, false);
                for (std::size_t k = 0; k < step; ++k) {
                    if (rays[p].tight[k] && rays[q].tight[k]) {
                        common.push_back(h[order[k]]);
                        tight[k] = true;
                    }
                }
                if (common.size() + 2 < d || rank(common) != d - 2)
                    continue;
                tight[step] = true;
                Vec y = val[p] * rays[q].y - val[q] * rays[p].y;
                next.push_back({primitive_integer(y), std::move(tight)});
            }
        }
        rays = std::move(next);
    }

    VRep out;
    for (const auto& r : rays) {
        const Rational& t = r.y[n];
        Vec x(r.y.begin(), r.y.begin() + static_cast<std::ptrdiff_t>(n));
        if (t > 0)
            out.vertices.push_back((Rational(1) / t) * x);
        else
            out.rays.push_back(primitive_integer(x));
    }
    if (out.vertices.empty())
        return {};
    std::sort(out.vertices.begin(), out.vertices.end(), lex_less);
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
    std::sort(out.rays.begin(), out.rays.end(), lex_less);
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    return out;
}

} // namespace asym
