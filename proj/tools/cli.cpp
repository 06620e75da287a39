#include "cli.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>

#include "asym/dual.hpp"
#include "asym/errors.hpp"
#include "asym/io.hpp"
#include "asym/operators.hpp"
#include "asym/symmetry.hpp"
#include "asym/verify.hpp"

namespace asym::cli {

namespace {

using io::Json;

struct Options {
    std::string output = "text";
    std::string fixture;
    std::vector<std::string> spaces;
    std::string functional;
    std::string op_file;
    std::string epsilon;
    std::uint64_t seed = 42;
    std::size_t cases = 100;
    std::string dims = "1-4";
    std::string mutant = "none";
};

bool json_output(const Options& o) { return o.output == "json"; }

void emit(std::ostream& out, const Options& o, const Json& j, const std::string& text)
{
    if (json_output(o))
        out << j.dump(2) << "\n";
    else
        out << text << "\n";
}

PolyhedralGauge space_arg(const Options& o)
{
    if (!o.fixture.empty()) {
        if (!o.spaces.empty())
            throw InputError("give either a space argument or --fixture, not both");
        return fixture(o.fixture);
    }
    if (o.spaces.size() != 1)
        throw InputError("expected one space (file path or fixture name)");
    return io::load_space(o.spaces.front());
}

Json certificate_json(const Certificate& c)
{
    Json j;
    j["kind"] = c.is_ray() ? "ray" : "point";
    j["coords"] = io::to_json(c.coords);
    return j;
}

int cmd_classify(const Options& o, std::ostream& out)
{
    const PolyhedralGauge g = space_arg(o);
    const SymmetryReport r = analyze(g);
    const bool bounded = r.sup_reverse.value.is_finite();

    std::string text = "type " + to_string(r.space_type) + ", c = " + format_rational(r.c);
    if (r.t1_certificate)
        text += ", non-T1 certificate d = " + format_vec(*r.t1_certificate);
    text += "\nT1 = " + std::string(r.t1 ? "yes" : "no") + ", c > 0 = " + (r.c > 0 ? "yes" : "no") +
            ", bounded ball = " + (bounded ? "yes" : "no");

    Json j;
    j["label"] = g.label();
    j["type"] = to_string(r.space_type);
    j["c"] = io::to_json(r.c);
    j["minimizer"] = io::to_json(*r.minimizer);
    j["t1"] = r.t1;
    j["t1_certificate"] = r.t1_certificate ? io::to_json(*r.t1_certificate) : Json(nullptr);
    j["sup_reverse"] = io::to_json(r.sup_reverse.value);
    j["bounded_ball"] = bounded;
    emit(out, o, j, text);
    return success;
}

int cmd_index(const Options& o, std::ostream& out)
{
    const PolyhedralGauge g = space_arg(o);
    const IndexResult r = index(g);
    const SupReverse s = sup_reverse(g);

    std::string text = "c = " + format_rational(r.c) + ", minimizer " + format_vec(r.minimizer) +
                       "\nsup ‖−x| = " + s.value.to_string() + (s.certificate.is_ray() ? ", ray " : ", at ") +
                       format_vec(s.certificate.coords);
    Json j;
    j["c"] = io::to_json(r.c);
    j["minimizer"] = io::to_json(r.minimizer);
    j["sup_reverse"] = io::to_json(s.value);
    j["sup_reverse_certificate"] = certificate_json(s.certificate);
    if (r.c > 0)
        j["product_identity"] = check_identity(g);
    emit(out, o, j, text);
    return success;
}

int cmd_dual_norm(Options o, std::ostream& out)
{
    if (o.functional.empty() && !o.spaces.empty()) {
        o.functional = o.spaces.back();
        o.spaces.pop_back();
    }
    if (o.functional.empty())
        throw InputError("dual-norm needs a functional, e.g. \"1,0\"");
    const PolyhedralGauge g = space_arg(o);
    const Vec p = io::parse_vec(o.functional);
    const FlatNorm f = flat_norm(g, p);

    std::string text = f.value.to_string();
    if (f.value.is_infinite())
        text += ", ray " + format_vec(f.certificate.coords) + ", p ∉ X♭";
    else
        text += ", attained at " + format_vec(f.certificate.coords);
    Json j;
    j["flat_norm"] = io::to_json(f.value);
    j["member"] = f.value.is_finite();
    j["certificate"] = certificate_json(f.certificate);
    j["symmetric_dual_norm"] = io::to_json(symmetric_dual_norm(g, p));
    emit(out, o, j, text);
    return success;
}

int cmd_opnorm(const Options& o, std::ostream& out)
{
    const LinearOperator t = io::load_operator_file(o.op_file);
    const OpNormReport r = lc_norm(t);

    std::string text = r.lc_norm.to_string();
    text += (r.certificate.is_ray() ? "\ndiscontinuity ray " : "\nattained at ") + format_vec(r.certificate.coords);
    text += "\nsymmetric operator norm " + format_rational(r.ls_norm);
    Json j;
    j["lc_norm"] = io::to_json(r.lc_norm);
    j["continuous"] = r.lc_norm.is_finite();
    j["certificate"] = certificate_json(r.certificate);
    j["ls_norm"] = io::to_json(r.ls_norm);
    emit(out, o, j, text);
    return success;
}

int cmd_witness(const Options& o, std::ostream& out)
{
    if (o.spaces.size() != 2)
        throw InputError("witness needs two spaces: X Y");
    const PolyhedralGauge x = io::load_space(o.spaces[0]);
    const PolyhedralGauge y = io::load_space(o.spaces[1]);
    const Witness w = nonreversible_witness(x, y);

    std::string text =
        "matrix " + format_matrix(w.op.matrix()) + ", discontinuity ray " + format_vec(w.discontinuity_ray);
    Json j;
    j["matrix"] = io::to_json(w.op.matrix());
    j["functional"] = io::to_json(w.functional);
    j["direction"] = io::to_json(w.direction);
    j["discontinuity_ray"] = io::to_json(w.discontinuity_ray);
    emit(out, o, j, text);
    return success;
}

int cmd_perturb(const Options& o, std::ostream& out)
{
    const LinearOperator h = io::load_operator_file(o.op_file);
    const auto eps = parse_rational(o.epsilon);
    if (!eps)
        throw InputError("epsilon: malformed rational \"" + o.epsilon + "\"");
    const Perturbation p = perturb_nonsymmetric(h, *eps);

    std::string text = "perturbation " + format_matrix(p.perturbation.matrix()) + ", perturbed " +
                       format_matrix(p.perturbed.matrix()) + ", discontinuity ray " +
                       format_vec(p.discontinuity_ray);
    Json j;
    j["perturbation"] = io::to_json(p.perturbation.matrix());
    j["perturbation_norm"] = io::to_json(lc_norm(p.perturbation).lc_norm);
    j["perturbed"] = io::to_json(p.perturbed.matrix());
    j["discontinuity_ray"] = io::to_json(p.discontinuity_ray);
    emit(out, o, j, text);
    return success;
}

std::pair<std::size_t, std::size_t> parse_dims(const std::string& s)
{
    const auto dash = s.find('-');
    try {
        if (dash == std::string::npos) {
            const auto n = std::stoul(s);
            return {n, n};
        }
        return {std::stoul(s.substr(0, dash)), std::stoul(s.substr(dash + 1))};
    } catch (const std::exception&) {
        throw InputError("--dims: expected \"min-max\", got \"" + s + "\"");
    }
}

int cmd_verify(const Options& o, std::ostream& out)
{
    RunConfig cfg;
    cfg.seed = o.seed;
    cfg.cases = o.cases;
    std::tie(cfg.dim_min, cfg.dim_max) = parse_dims(o.dims);
    if (cfg.dim_max > 5)
        throw InputError("--dims: maximum dimension is 5");
    cfg.mutation = parse_mutation(o.mutant);
    const CampaignReport report = run_campaign(cfg);
    if (json_output(o))
        out << to_json(report).dump(2) << "\n";
    else
        out << render_text(report);
    return report.ok() ? success : input_error;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact computations on polyhedral asymmetric norms", "asymnorm"};
    app.require_subcommand(1);
    Options o;

    auto output_flag = [&o](CLI::App* c) {
        c->add_option("--output", o.output, "text or json")->check(CLI::IsMember({"text", "json"}));
    };
    auto fixture_flag = [&o](CLI::App* c) {
        c->add_option("--fixture", o.fixture, "upper_real | referee_plane | weighted_linf:<n> | sup_gauge:<n> | linf_sym:<n>");
    };

    auto* classify = app.add_subcommand("classify", "Type, index and T1 certificate of a space");
    classify->add_option("space", o.spaces, "gauge file or fixture name");
    fixture_flag(classify);
    output_flag(classify);

    auto* idx = app.add_subcommand("index", "Index of symmetry with minimizer and reverse supremum");
    idx->add_option("space", o.spaces, "gauge file or fixture name");
    fixture_flag(idx);
    output_flag(idx);

    auto* dual = app.add_subcommand("dual-norm", "Flat norm of a functional");
    dual->add_option("args", o.spaces, "[space] functional")->expected(0, 2);
    dual->add_option("--functional,-p", o.functional, "coordinates, e.g. \"1,0\"");
    fixture_flag(dual);
    output_flag(dual);

    auto* opnorm = app.add_subcommand("opnorm", "Asymmetric operator norm");
    opnorm->add_option("operator", o.op_file, "operator file")->required();
    output_flag(opnorm);

    auto* witness = app.add_subcommand("witness", "Continuous T with -T discontinuous");
    witness->add_option("spaces", o.spaces, "X Y (files or fixture names)")->expected(2);
    output_flag(witness);

    auto* perturb = app.add_subcommand("perturb", "Perturbation within epsilon with discontinuous negative");
    perturb->add_option("operator", o.op_file, "operator file")->required();
    perturb->add_option("epsilon", o.epsilon, "positive rational")->required();
    output_flag(perturb);

    auto* verify = app.add_subcommand("verify", "Randomized invariant campaign");
    verify->add_option("--seed", o.seed);
    verify->add_option("--cases", o.cases);
    verify->add_option("--dims", o.dims, "min-max");
    verify->add_option("--mutant", o.mutant)->check(CLI::IsMember({"none", "drop-ball-rows", "drop-reverse-row"}));
    output_flag(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return input_error;
    }

    try {
        if (classify->parsed())
            return cmd_classify(o, out);
        if (idx->parsed())
            return cmd_index(o, out);
        if (dual->parsed())
            return cmd_dual_norm(o, out);
        if (opnorm->parsed())
            return cmd_opnorm(o, out);
        if (witness->parsed())
            return cmd_witness(o, out);
        if (perturb->parsed())
            return cmd_perturb(o, out);
        if (verify->parsed())
            return cmd_verify(o, out);
    } catch (const PreconditionError& e) {
        err << "precondition not met: " << e.what() << "\n";
        return precondition_error;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return input_error;
    } catch (const CapacityError& e) {
        err << "capacity exceeded: " << e.what() << "\n";
        return input_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return internal_error;
    }
    return input_error;
}

} // namespace asym::cli
