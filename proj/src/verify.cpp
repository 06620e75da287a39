#include "asym/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "asym/dual.hpp"
#include "asym/errors.hpp"
#include "asym/operators.hpp"
#include "asym/random.hpp"

namespace asym {

namespace {

struct Outcome {
    enum class Kind { pass, fail, skip } kind = Kind::pass;
    std::string message;

    static Outcome pass() { return {}; }
    static Outcome skip() { return {Kind::skip, {}}; }
    static Outcome fail(std::string m) { return {Kind::fail, std::move(m)}; }
};

using Check = std::function<Outcome(const PolyhedralGauge&, Rng&, const RunConfig&)>;

constexpr int samples_per_case = 4;

std::string show(const Vec& v) { return format_vec(v); }

// A second space for operator suites; kept small so the campaign stays fast.
PolyhedralGauge companion(Rng& rng, const RunConfig& cfg, Population population)
{
    const std::size_t hi = std::min<std::size_t>(cfg.dim_max, 3);
    const std::size_t lo = std::min(cfg.dim_min, hi);
    const auto m = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
    return random_gauge(rng, m, population);
}

// Nonnegative combination of generators: always in the flat dual cone.
Vec cone_element(Rng& rng, const PolyhedralGauge& g)
{
    Vec p = zeros(g.dim());
    for (const auto& a : g.generators())
        if (rng.chance(1, 2))
            p = p + Rational(rng.uniform(0, 3)) * a;
    return p;
}

Outcome subadditivity(const PolyhedralGauge& g, Rng& rng, const RunConfig&)
{
    for (int s = 0; s < samples_per_case; ++s) {
        const Vec x = random_point(rng, g.dim()), y = random_point(rng, g.dim());
        if (eval_norm(g, x + y) > eval_norm(g, x) + eval_norm(g, y))
            return Outcome::fail("‖x+y| > ‖x| + ‖y| at x = " + show(x) + ", y = " + show(y));
    }
    return Outcome::pass();
}

Outcome homogeneity(const PolyhedralGauge& g, Rng& rng, const RunConfig&)
{
    for (int s = 0; s < samples_per_case; ++s) {
        const Vec x = random_point(rng, g.dim());
        const Rational lambda = abs(rng.rational(10, 5));
        if (eval_norm(g, lambda * x) != lambda * eval_norm(g, x))
            return Outcome::fail("‖λx| ≠ λ‖x| at λ = " + format_rational(lambda) + ", x = " + show(x));
    }
    return Outcome::pass();
}

Outcome symmetric_norm_is_norm(const PolyhedralGauge& g, Rng& rng, const RunConfig&)
{
    for (int s = 0; s < samples_per_case; ++s) {
        const Vec x = random_point(rng, g.dim()), y = random_point(rng, g.dim());
        const Rational nx = symmetric_norm(g, x);
        if (nx != symmetric_norm(g, -x))
            return Outcome::fail("‖·‖ₛ not symmetric at " + show(x));
        if (symmetric_norm(g, x + y) > nx + symmetric_norm(g, y))
            return Outcome::fail("‖·‖ₛ not subadditive at " + show(x) + ", " + show(y));
        if ((nx == 0) != is_zero(x))
            return Outcome::fail("‖·‖ₛ vanishes off the origin at " + show(x));
        if (eval_norm(g, x) > nx)
            return Outcome::fail("‖x| > ‖x‖ₛ at " + show(x));
    }
    return Outcome::pass();
}

Outcome sum_with_symmetric_identity(const PolyhedralGauge& g, Rng& rng, const RunConfig&)
{
    const PolyhedralGauge h = sum_with_symmetric(g);
    for (int s = 0; s < samples_per_case; ++s) {
        const Vec x = random_point(rng, g.dim());
        if (eval_norm(h, x) != eval_norm(g, x) + symmetric_norm(g, x))
            return Outcome::fail("sum gauge differs from ‖x| + ‖x‖ₛ at " + show(x));
    }
    return Outcome::pass();
}

Outcome index_range(const PolyhedralGauge& g, Rng&, const RunConfig& cfg)
{
    const IndexResult r = index(g, cfg.mutation);
    if (r.c < 0 || r.c > 1)
        return Outcome::fail("c = " + format_rational(r.c) + " outside [0, 1]");
    if (eval_norm(g, r.minimizer) != 1 || eval_reverse(g, r.minimizer) != r.c)
        return Outcome::fail("minimizer " + show(r.minimizer) + " does not attain c on the sphere");
    return Outcome::pass();
}

Outcome c_one_iff_symmetric(const PolyhedralGauge& g, Rng&, const RunConfig& cfg)
{
    // Irredundant rows of the unit ball are unique; symmetry means they are closed under negation.
    const PolyhedralGauge canonical = canonicalize(g);
    const auto& gens = canonical.generators();
    bool closed = true;
    for (const auto& a : gens)
        closed = closed && std::find(gens.begin(), gens.end(), -a) != gens.end();
    const bool one = index(g, cfg.mutation).c == 1;
    if (one != closed)
        return Outcome::fail(std::string("c = 1 is ") + (one ? "true" : "false") + " but the ball is " +
                             (closed ? "" : "not ") + "symmetric");
    return Outcome::pass();
}

Outcome finite_dim_trichotomy(const PolyhedralGauge& g, Rng&, const RunConfig& cfg)
{
    const bool positive = index(g, cfg.mutation).c > 0;
    const bool t1 = is_t1(g).t1;
    const bool full = dual_cone_full(g);
    const bool bounded = enumerate_vrep(unit_ball(g)).rays.empty();
    if (positive != t1 || t1 != full || full != bounded) {
        std::ostringstream m;
        m << std::boolalpha << "c>0 = " << positive << ", T1 = " << t1 << ", dual cone full = " << full
          << ", bounded ball = " << bounded;
        return Outcome::fail(m.str());
    }
    classify(g);
    return Outcome::pass();
}

Outcome product_identity(const PolyhedralGauge& g, Rng&, const RunConfig& cfg)
{
    if (index(g).c == 0)
        return Outcome::skip();
    // Both factors are taken from their certificates, so the infimum must be attained on the sphere.
    const IndexResult r = index(g, cfg.mutation);
    const SupReverse s = sup_reverse(g);
    if (eval_norm(g, r.minimizer) != 1)
        return Outcome::fail("index minimizer " + show(r.minimizer) + " is off the unit sphere (‖x| = " +
                             format_rational(eval_norm(g, r.minimizer)) + ")");
    const Rational inf = eval_reverse(g, r.minimizer);
    if (s.value.is_infinite() || s.value.value() * inf != 1)
        return Outcome::fail("sup ‖−x| · inf ‖−x| = " + s.value.to_string() + " · " + format_rational(inf) + " ≠ 1");
    return Outcome::pass();
}

Outcome inequalities_1_2(const PolyhedralGauge& g, Rng& rng, const RunConfig& cfg)
{
    const Rational c = index(g, cfg.mutation).c;
    for (int s = 0; s < samples_per_case; ++s) {
        const Vec x = random_point(rng, g.dim());
        const Rational n = eval_norm(g, x), r = eval_reverse(g, x), sn = symmetric_norm(g, x);
        if (n > sn)
            return Outcome::fail("‖x| > ‖x‖ₛ at " + show(x));
        if (c == 0)
            continue;
        if (c * n > r || c * r > n)
            return Outcome::fail("c‖x| ≤ ‖−x| ≤ ‖x|/c fails at " + show(x));
        if (c * sn > n)
            return Outcome::fail("c‖x‖ₛ > ‖x| at " + show(x));
    }
    return Outcome::pass();
}

Outcome support_vs_vertices(const PolyhedralGauge& g, Rng& rng, const RunConfig&)
{
    const HPolyhedron ball = unit_ball(g);
    const VRep v = enumerate_vrep(ball);
    for (int s = 0; s < samples_per_case; ++s) {
        const Vec p = random_point(rng, g.dim());
        ExtendedRational expected(0);
        bool first = true;
        for (const auto& vertex : v.vertices) {
            const ExtendedRational val(dot(p, vertex));
            if (first || val > expected)
                expected = val;
            first = false;
        }
        for (const auto& ray : v.rays)
            if (dot(p, ray) > 0)
                expected = ExtendedRational::infinity();
        const ExtendedRational got = support_value(ball, p).value;
        if (got != expected)
            return Outcome::fail("support " + got.to_string() + " vs vertex max " + expected.to_string() + " at p = " +
                                 show(p));
    }
    return Outcome::pass();
}

Outcome dual_cone_convexity(const PolyhedralGauge& g, Rng& rng, const RunConfig&)
{
    for (int s = 0; s < samples_per_case; ++s) {
        const Vec p = cone_element(rng, g), q = cone_element(rng, g);
        const ExtendedRational fp = flat_norm(g, p).value, fq = flat_norm(g, q).value;
        if (fp.is_infinite() || fq.is_infinite())
            return Outcome::fail("nonnegative generator combination outside X♭");
        const Rational lambda = abs(rng.rational(5, 3));
        if (flat_norm(g, p + q).value > fp + fq)
            return Outcome::fail("‖p+q|♭ > ‖p|♭ + ‖q|♭ at p = " + show(p) + ", q = " + show(q));
        if (flat_norm(g, lambda * p).value != fp * lambda)
            return Outcome::fail("‖λp|♭ ≠ λ‖p|♭ at p = " + show(p));
    }
    return Outcome::pass();
}

Outcome flat_norm_bounds(const PolyhedralGauge& g, Rng& rng, const RunConfig& cfg)
{
    const Rational c = index(g, cfg.mutation).c;
    for (int s = 0; s < samples_per_case; ++s) {
        const Vec p = random_point(rng, g.dim());
        const Rational sym = symmetric_dual_norm(g, p);
        const ExtendedRational flat = flat_norm(g, p).value;
        if (ExtendedRational(sym) > flat)
            return Outcome::fail("‖p‖* > ‖p|♭ at p = " + show(p));
        if (c > 0 && (flat.is_infinite() || c * flat.value() > sym))
            return Outcome::fail("c‖p|♭ > ‖p‖* at p = " + show(p));
    }
    return Outcome::pass();
}

Outcome operator_inequalities(const PolyhedralGauge& g, Rng& rng, const RunConfig& cfg)
{
    const PolyhedralGauge y = companion(rng, cfg, Population::unbiased);
    const Rational c = index(g, cfg.mutation).c;
    for (int s = 0; s < 2; ++s) {
        const LinearOperator t = random_continuous_operator(rng, g, y);
        const LinearOperator u = random_continuous_operator(rng, g, y);
        const OpNormReport rt = lc_norm(t);
        if (rt.lc_norm.is_infinite())
            return Outcome::fail("sampled continuous operator has infinite norm");
        const Rational lc = rt.lc_norm.value();
        if (rt.ls_norm > lc)
            return Outcome::fail("‖T‖_Ls > ‖T|_Lc for " + format_matrix(t.matrix()));
        if (lc_norm(t + u).lc_norm > rt.lc_norm + lc_norm(u).lc_norm)
            return Outcome::fail("‖S+T|_Lc > ‖S|_Lc + ‖T|_Lc for " + format_matrix(t.matrix()) + ", " +
                                 format_matrix(u.matrix()));
        if (c == 0)
            continue;
        const ExtendedRational neg = lc_norm(-t).lc_norm;
        if (neg.is_infinite() || c * lc > neg.value() || c * neg.value() > lc)
            return Outcome::fail("c‖T|_Lc ≤ ‖−T|_Lc ≤ ‖T|_Lc/c fails for " + format_matrix(t.matrix()));
        if (c * lc > rt.ls_norm)
            return Outcome::fail("‖T|_Lc > ‖T‖_Ls/c for " + format_matrix(t.matrix()));
    }
    return Outcome::pass();
}

Outcome rank_one_isometry(const PolyhedralGauge& g, Rng& rng, const RunConfig& cfg)
{
    const PolyhedralGauge y = companion(rng, cfg, Population::non_t1);
    const T1Result t1 = is_t1(y);
    if (t1.t1)
        return Outcome::fail("non-T1 sample is T1");
    const Vec e = (Rational(1) / eval_reverse(y, *t1.certificate)) * (-*t1.certificate);
    for (int s = 0; s < samples_per_case; ++s) {
        const Vec p = s % 2 == 0 ? random_point(rng, g.dim()) : cone_element(rng, g);
        const LinearOperator t = rank_one(p, e, g, y);
        if (lc_norm(t).lc_norm != flat_norm(g, p).value)
            return Outcome::fail("‖p⊗e|_Lc ≠ ‖p|♭ at p = " + show(p));
    }
    return Outcome::pass();
}

Outcome witness_validity(const PolyhedralGauge& g, Rng& rng, const RunConfig& cfg)
{
    const PolyhedralGauge y = companion(rng, cfg, rng.chance(1, 2) ? Population::non_t1 : Population::unbiased);
    const bool zero_x = index(g, cfg.mutation).c == 0;
    const bool non_t1_y = !is_t1(y).t1;
    if (lc_is_vector_space(g, y) == (zero_x && index(y).c == 0))
        return Outcome::fail("vector-space decision disagrees with c(X) = c(Y) = 0");
    if (!(zero_x && non_t1_y)) {
        try {
            nonreversible_witness(g, y);
        } catch (const PreconditionError&) {
            return Outcome::pass();
        }
        return Outcome::fail("witness built outside its hypotheses");
    }
    const Witness w = nonreversible_witness(g, y);
    if (lc_norm(w.op).lc_norm.is_infinite())
        return Outcome::fail("witness is discontinuous");
    const Vec& r = w.discontinuity_ray;
    if (eval_norm(g, r) != 0 || eval_norm(y, (-w.op).apply(r)) <= 0)
        return Outcome::fail("witness ray " + show(r) + " does not certify −T ∉ Lc");

    const LinearOperator h = random_continuous_operator(rng, g, y);
    const Rational eps = Rational(1) / Rational(rng.uniform(1, 1000));
    const Perturbation p = perturb_nonsymmetric(h, eps);
    const ExtendedRational size = lc_norm(p.perturbation).lc_norm;
    if (size > ExtendedRational(eps))
        return Outcome::fail("perturbation norm " + size.to_string() + " exceeds ε = " + format_rational(eps));
    if (lc_norm(p.perturbed).lc_norm.is_infinite() || lc_norm(-p.perturbed).lc_norm.is_finite())
        return Outcome::fail("perturbed operator has the wrong continuity pattern");
    return Outcome::pass();
}

Outcome operator_space_index(const PolyhedralGauge& g, Rng& rng, const RunConfig& cfg)
{
    const Rational c = index(g, cfg.mutation).c;
    if (c == 0 || g.dim() > 2)
        return Outcome::skip();
    const PolyhedralGauge y = companion(rng, cfg, Population::unbiased);
    if (y.dim() * g.dim() > 4)
        return Outcome::skip();
    const PolyhedralGauge op = operator_space_gauge(g, y);
    if (index(op).c < c)
        return Outcome::fail("c(Lc) = " + format_rational(index(op).c) + " < c(X) = " + format_rational(c));
    for (int s = 0; s < samples_per_case; ++s) {
        const LinearOperator t(random_matrix(rng, y.dim(), g.dim()), g, y);
        if (ExtendedRational(eval_norm(op, flatten(t.matrix()))) != lc_norm(t).lc_norm)
            return Outcome::fail("operator gauge differs from ‖T|_Lc at " + format_matrix(t.matrix()));
    }
    return Outcome::pass();
}

struct Suite {
    std::string name;
    Check check;
};

const std::vector<Suite>& suites()
{
    static const std::vector<Suite> all = {
        {"subadditivity", subadditivity},
        {"homogeneity", homogeneity},
        {"symmetric_norm_is_norm", symmetric_norm_is_norm},
        {"sum_with_symmetric_identity", sum_with_symmetric_identity},
        {"index_range", index_range},
        {"c_one_iff_symmetric", c_one_iff_symmetric},
        {"finite_dim_trichotomy", finite_dim_trichotomy},
        {"product_identity", product_identity},
        {"inequalities_1_2", inequalities_1_2},
        {"support_vs_vertices", support_vs_vertices},
        {"dual_cone_convexity", dual_cone_convexity},
        {"flat_norm_bounds", flat_norm_bounds},
        {"operator_inequalities", operator_inequalities},
        {"rank_one_isometry", rank_one_isometry},
        {"witness_validity", witness_validity},
        {"operator_space_index", operator_space_index},
    };
    return all;
}

Outcome run_check(const Check& check, const PolyhedralGauge& g, std::uint64_t seed, const RunConfig& cfg)
{
    Rng rng(seed);
    try {
        return check(g, rng, cfg);
    } catch (const std::exception& e) {
        return Outcome::fail(std::string("exception: ") + e.what());
    }
}

std::optional<PolyhedralGauge> try_gauge(std::size_t dim, std::vector<Vec> gens)
{
    try {
        return PolyhedralGauge(dim, std::move(gens), "shrunk");
    } catch (const InputError&) {
        return std::nullopt;
    }
}

// Greedy: drop generators, then zero coordinates, while the check keeps failing.
Counterexample shrink(const Check& check, PolyhedralGauge g, std::uint64_t seed, const RunConfig& cfg, Outcome failure)
{
    Counterexample cx{0, g.generators().size(), g, failure.message};
    bool progress = true;
    while (progress) {
        progress = false;
        const auto gens = g.generators();
        auto attempt = [&](std::vector<Vec> candidate) {
            auto h = try_gauge(g.dim(), std::move(candidate));
            if (!h)
                return false;
            Outcome o = run_check(check, *h, seed, cfg);
            if (o.kind != Outcome::Kind::fail)
                return false;
            g = *h;
            failure = std::move(o);
            return true;
        };
        for (std::size_t k = 0; k < gens.size() && !progress; ++k) {
            auto candidate = gens;
            candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(k));
            progress = attempt(std::move(candidate));
        }
        for (std::size_t k = 0; k < gens.size() && !progress; ++k)
            for (std::size_t j = 0; j < g.dim() && !progress; ++j) {
                if (gens[k][j] == 0)
                    continue;
                auto candidate = gens;
                candidate[k][j] = 0;
                progress = attempt(std::move(candidate));
            }
    }
    cx.gauge = g;
    cx.message = failure.message;
    return cx;
}

Population population_for(std::size_t case_index)
{
    switch (case_index % 4) {
    case 0:
        return Population::symmetric;
    case 1:
        return Population::non_t1;
    default:
        return Population::unbiased;
    }
}

} // namespace

bool CampaignReport::ok() const
{
    for (const auto& s : suites)
        if (s.failed > 0)
            return false;
    return true;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& s : suites())
            n.push_back(s.name);
        return n;
    }();
    return names;
}

CampaignReport run_campaign(const RunConfig& config)
{
    if (config.dim_min < 1 || config.dim_min > config.dim_max)
        throw InputError("dimension range must satisfy 1 ≤ min ≤ max");
    CampaignReport report{config, {}};
    if (config.cases == 0)
        return report;
    for (const auto& s : suites())
        report.suites.push_back(SuiteResult{s.name, 0, 0, 0, std::nullopt});

    struct CaseResult {
        PolyhedralGauge gauge;
        std::vector<Outcome> outcomes;
    };
    auto evaluate = [&](std::size_t i) {
        const std::uint64_t case_seed = derive_seed(config.seed, i);
        Rng rng(case_seed);
        const auto n = static_cast<std::size_t>(
            rng.uniform(static_cast<std::int64_t>(config.dim_min), static_cast<std::int64_t>(config.dim_max)));
        CaseResult c{random_gauge(rng, n, population_for(i)), {}};
        for (std::size_t k = 0; k < suites().size(); ++k)
            c.outcomes.push_back(run_check(suites()[k].check, c.gauge, derive_seed(case_seed, k + 1), config));
        return c;
    };

    // Cases are independent; workers fill slots by index and the merge below is sequential.
    std::vector<std::optional<CaseResult>> results(config.cases);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < config.cases; i = next++) {
            try {
                results[i] = evaluate(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        }
    };
    const std::size_t workers =
        std::min<std::size_t>(config.cases, std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);

    for (std::size_t i = 0; i < config.cases; ++i) {
        const CaseResult& c = *results[i];
        const std::uint64_t case_seed = derive_seed(config.seed, i);
        for (std::size_t k = 0; k < suites().size(); ++k) {
            const Outcome& o = c.outcomes[k];
            SuiteResult& r = report.suites[k];
            switch (o.kind) {
            case Outcome::Kind::pass:
                ++r.passed;
                break;
            case Outcome::Kind::skip:
                ++r.skipped;
                break;
            case Outcome::Kind::fail:
                ++r.failed;
                if (!r.counterexample) {
                    r.counterexample = shrink(suites()[k].check, c.gauge, derive_seed(case_seed, k + 1), config, o);
                    r.counterexample->case_index = i;
                }
                break;
            }
        }
    }
    return report;
}

std::string mutation_name(IndexMutation m)
{
    switch (m) {
    case IndexMutation::none:
        return "none";
    case IndexMutation::drop_ball_rows:
        return "drop-ball-rows";
    case IndexMutation::drop_reverse_row:
        return "drop-reverse-row";
    }
    return "?";
}

IndexMutation parse_mutation(const std::string& name)
{
    for (auto m : {IndexMutation::none, IndexMutation::drop_ball_rows, IndexMutation::drop_reverse_row})
        if (mutation_name(m) == name)
            return m;
    throw InputError("unknown mutant '" + name + "'");
}

io::Json to_json(const CampaignReport& report)
{
    io::Json j;
    j["seed"] = report.config.seed;
    j["cases"] = report.config.cases;
    j["dims"] = io::Json::array({report.config.dim_min, report.config.dim_max});
    j["mutant"] = mutation_name(report.config.mutation);
    io::Json suites = io::Json::array();
    for (const auto& s : report.suites) {
        io::Json e;
        e["name"] = s.name;
        e["passed"] = s.passed;
        e["failed"] = s.failed;
        e["skipped"] = s.skipped;
        if (s.counterexample) {
            io::Json c;
            c["case"] = s.counterexample->case_index;
            c["message"] = s.counterexample->message;
            c["original_generators"] = s.counterexample->original_generators;
            c["gauge"] = io::to_json(s.counterexample->gauge);
            e["counterexample"] = std::move(c);
        } else {
            e["counterexample"] = nullptr;
        }
        suites.push_back(std::move(e));
    }
    j["suites"] = std::move(suites);
    j["ok"] = report.ok();
    return j;
}

std::string render_text(const CampaignReport& report)
{
    std::ostringstream out;
    const RunConfig& c = report.config;
    out << "verify seed=" << c.seed << " cases=" << c.cases << " dims=" << c.dim_min << "-" << c.dim_max;
    if (c.mutation != IndexMutation::none)
        out << " mutant=" << mutation_name(c.mutation);
    out << "\n";
    for (const auto& s : report.suites) {
        out << "  " << std::left << std::setw(30) << s.name << (s.failed ? "FAIL" : "ok  ") << "  passed "
            << s.passed << ", failed " << s.failed << ", skipped " << s.skipped << "\n";
        if (s.counterexample) {
            const auto& cx = *s.counterexample;
            out << "    counterexample (case " << cx.case_index << ", shrunk from " << cx.original_generators
                << " to " << cx.gauge.generators().size() << " generators): " << cx.message << "\n";
            out << "    gauge " << io::to_json(cx.gauge).dump() << "\n";
        }
    }
    out << (report.ok() ? "all suites pass" : "FAILURES") << "\n";
    return out.str();
}

} // namespace asym
