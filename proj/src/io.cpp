#include "asym/io.hpp"

#include <fstream>
#include <sstream>

#include "asym/errors.hpp"

namespace asym::io {

Json to_json(const Rational& r) { return format_rational(r); }

Json to_json(const ExtendedRational& r) { return r.to_string(); }

Json to_json(const Vec& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(to_json(x));
    return a;
}

Json to_json(const Matrix& m)
{
    Json a = Json::array();
    for (const auto& row : m)
        a.push_back(to_json(row));
    return a;
}

Json to_json(const PolyhedralGauge& g)
{
    Json j;
    j["dim"] = g.dim();
    j["generators"] = to_json(Matrix(g.generators()));
    j["label"] = g.label();
    return j;
}

Rational rational_from_json(const Json& j, const std::string& where)
{
    if (j.is_number_integer())
        return j.is_number_unsigned() ? Rational(j.get<std::uint64_t>()) : Rational(j.get<std::int64_t>());
    if (j.is_string()) {
        if (auto r = parse_rational(j.get<std::string>()))
            return *r;
        throw InputError(where + ": malformed rational \"" + j.get<std::string>() + "\"");
    }
    if (j.is_number_float())
        throw InputError(where + ": floating-point value " + j.dump() + " is not exact; write it as \"p/q\"");
    throw InputError(where + ": expected a rational, got " + std::string(j.type_name()));
}

Vec vec_from_json(const Json& j, const std::string& where)
{
    if (!j.is_array())
        throw InputError(where + ": expected an array");
    Vec v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

PolyhedralGauge gauge_from_json(const Json& j)
{
    if (!j.is_object())
        throw InputError("gauge: expected an object");
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
        throw InputError("dim: expected a positive integer");
    const auto dim = j["dim"].get<std::size_t>();
    if (!j.contains("generators") || !j["generators"].is_array())
        throw InputError("generators: expected an array of vectors");
    std::vector<Vec> gens;
    const Json& g = j["generators"];
    for (std::size_t i = 0; i < g.size(); ++i) {
        const std::string where = "generators[" + std::to_string(i) + "]";
        Vec v = vec_from_json(g[i], where);
        if (v.size() != dim)
            throw InputError(where + ": has " + std::to_string(v.size()) + " coordinates, dim is " +
                             std::to_string(dim));
        gens.push_back(std::move(v));
    }
    std::string label;
    if (j.contains("label")) {
        if (!j["label"].is_string())
            throw InputError("label: expected a string");
        label = j["label"].get<std::string>();
    }
    return PolyhedralGauge(dim, std::move(gens), std::move(label));
}

namespace {

PolyhedralGauge space_from_json(const Json& j, const std::string& field, const std::filesystem::path& base_dir)
{
    if (j.is_object()) {
        try {
            return gauge_from_json(j);
        } catch (const AxiomError& e) {
            throw AxiomError(e.axiom(), field + ": " + e.what());
        } catch (const InputError& e) {
            throw InputError(field + "." + e.what());
        }
    }
    if (!j.is_string())
        throw InputError(field + ": expected an inline gauge, a file path, or \"fixture:<name>\"");
    const auto s = j.get<std::string>();
    if (s.rfind("fixture:", 0) == 0)
        return fixture(s.substr(8));
    std::filesystem::path p(s);
    if (p.is_relative())
        p = base_dir / p;
    return load_gauge_file(p);
}

} // namespace

LinearOperator operator_from_json(const Json& j, const std::filesystem::path& base_dir)
{
    if (!j.is_object())
        throw InputError("operator: expected an object");
    for (const char* key : {"matrix", "domain", "codomain"})
        if (!j.contains(key))
            throw InputError(std::string(key) + ": missing");
    PolyhedralGauge domain = space_from_json(j["domain"], "domain", base_dir);
    PolyhedralGauge codomain = space_from_json(j["codomain"], "codomain", base_dir);
    if (!j["matrix"].is_array())
        throw InputError("matrix: expected an array of rows");
    Matrix m;
    for (std::size_t i = 0; i < j["matrix"].size(); ++i)
        m.push_back(vec_from_json(j["matrix"][i], "matrix[" + std::to_string(i) + "]"));
    return LinearOperator(std::move(m), std::move(domain), std::move(codomain));
}

Json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError(path.string() + ": cannot open");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

PolyhedralGauge load_gauge_file(const std::filesystem::path& path)
{
    const Json j = read_json_file(path);
    try {
        return gauge_from_json(j);
    } catch (const AxiomError& e) {
        throw AxiomError(e.axiom(), path.string() + ": " + e.what());
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

LinearOperator load_operator_file(const std::filesystem::path& path)
{
    const Json j = read_json_file(path);
    try {
        return operator_from_json(j, path.parent_path());
    } catch (const AxiomError& e) {
        throw AxiomError(e.axiom(), path.string() + ": " + e.what());
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

PolyhedralGauge load_space(const std::string& name)
{
    std::error_code ec;
    if (std::filesystem::is_regular_file(name, ec))
        return load_gauge_file(name);
    if (name.rfind("fixture:", 0) == 0)
        return fixture(name.substr(8));
    return fixture(name);
}

Vec parse_vec(const std::string& text)
{
    std::string s;
    for (char ch : text)
        if (ch != '(' && ch != ')' && ch != '[' && ch != ']' && ch != ' ')
            s += ch;
    Vec v;
    std::stringstream in(s);
    std::string item;
    std::size_t i = 0;
    while (std::getline(in, item, ',')) {
        auto r = parse_rational(item);
        if (!r)
            throw InputError("coordinate " + std::to_string(i) + ": malformed rational \"" + item + "\"");
        v.push_back(*r);
        ++i;
    }
    if (v.empty())
        throw InputError("empty vector \"" + text + "\"");
    return v;
}

} // namespace asym::io
