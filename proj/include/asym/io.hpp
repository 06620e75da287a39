#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "asym/gauge.hpp"
#include "asym/operators.hpp"

namespace asym::io {

using Json = nlohmann::ordered_json;

/// Rational as a JSON string "p/q" (or "p").
Json to_json(const Rational& r);
/// "+inf" or "p/q".
Json to_json(const ExtendedRational& r);
Json to_json(const Vec& v);
Json to_json(const Matrix& m);
Json to_json(const PolyhedralGauge& g);

/// Accepts "p/q" strings and JSON integers; `where` prefixes diagnostics.
Rational rational_from_json(const Json& j, const std::string& where);
Vec vec_from_json(const Json& j, const std::string& where);

/// {"dim": n, "generators": [[...], ...], "label": "..."}
PolyhedralGauge gauge_from_json(const Json& j);

/**
 * {"matrix": [[...]], "domain": D, "codomain": D} where D is an inline gauge
 * object, "fixture:<name>", or a gauge file path relative to base_dir.
 */
LinearOperator operator_from_json(const Json& j, const std::filesystem::path& base_dir);

/// Parses a whole file; syntax errors report line and column.
Json read_json_file(const std::filesystem::path& path);

PolyhedralGauge load_gauge_file(const std::filesystem::path& path);
LinearOperator load_operator_file(const std::filesystem::path& path);

/// An existing file path, else "fixture:<name>" or a bare fixture name.
PolyhedralGauge load_space(const std::string& name);

/// "1,0", "(1, 0)", "-1/2".
Vec parse_vec(const std::string& text);

} // namespace asym::io
