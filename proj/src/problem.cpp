#include "skewinv/problem.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "skewinv/errors.hpp"

namespace skewinv {

namespace {

using nlohmann::json;

Rational rational_at(const json& value, const std::string& where) {
  if (!value.is_string()) throw ParseError(where + ": rationals must be written as strings");
  return parse_rational(value.get<std::string>());
}

std::vector<VectorQ> vectors_at(const json& value, std::size_t length, const std::string& where) {
  if (!value.is_array()) throw ParseError(where + ": expected a list of vectors");
  std::vector<VectorQ> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const auto& row = value[i];
    const std::string here = where + "[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != length)
      throw ParseError(here + ": expected " + std::to_string(length) + " entries");
    VectorQ v;
    for (std::size_t j = 0; j < row.size(); ++j) v.push_back(rational_at(row[j], here + "[" + std::to_string(j) + "]"));
    out.push_back(std::move(v));
  }
  return out;
}

MatrixQ square_matrix_at(const json& value, std::optional<std::size_t> size, const std::string& where) {
  if (!value.is_array() || value.empty()) throw ParseError(where + ": expected a non-empty matrix");
  const std::size_t n = size.value_or(value.size());
  if (value.size() != n) throw ParseError(where + ": matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  for (const auto& row : value)
    if (!row.is_array() || row.size() != n) throw ParseError(where + ": matrix is not square");
  return MatrixQ::from_rows(n, vectors_at(value, n, where));
}

std::size_t count_at(const json& value, const std::string& where) {
  if (!value.is_number_unsigned()) throw ParseError(where + ": expected a non-negative integer");
  return value.get<std::size_t>();
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("problem file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("problem file must be a JSON object");

  ProblemFile p;
  if (!doc.contains("variables")) throw ParseError("missing 'variables'");
  p.variables = count_at(doc["variables"], "variables");
  if (p.variables == 0) throw ParseError("variables: must be positive");
  if (doc.contains("rule")) {
    if (!doc["rule"].is_string()) throw ParseError("rule: expected a string");
    p.rule = parse_sign_rule(doc["rule"].get<std::string>());
  }
  if (doc.contains("cap")) p.cap = count_at(doc["cap"], "cap");
  if (doc.contains("names")) {
    const auto& names = doc["names"];
    if (!names.is_array() || names.size() != p.variables) throw ParseError("names: expected one name per variable");
    for (const auto& name : names) {
      if (!name.is_string() || name.get<std::string>().empty()) throw ParseError("names: expected non-empty strings");
      p.names.push_back(name.get<std::string>());
    }
  }
  if (doc.contains("group_generators")) {
    const auto& gens = doc["group_generators"];
    if (!gens.is_array()) throw ParseError("group_generators: expected a list of matrices");
    for (std::size_t i = 0; i < gens.size(); ++i)
      p.group_generators.push_back(square_matrix_at(gens[i], p.variables, "group_generators[" + std::to_string(i) + "]"));
  }
  if (doc.contains("arrangement")) {
    const auto& a = doc["arrangement"];
    if (!a.is_object() || !a.contains("ambient_dim") || !a.contains("subspaces"))
      throw ParseError("arrangement: expected 'ambient_dim' and 'subspaces'");
    Arrangement arr;
    arr.ambient_dim = count_at(a["ambient_dim"], "arrangement.ambient_dim");
    if (arr.ambient_dim == 0) throw ParseError("arrangement.ambient_dim: must be positive");
    const auto& subs = a["subspaces"];
    if (!subs.is_array() || subs.empty()) throw ParseError("arrangement.subspaces: expected a non-empty list");
    for (std::size_t i = 0; i < subs.size(); ++i) {
      const std::string where = "arrangement.subspaces[" + std::to_string(i) + "]";
      const auto& s = subs[i];
      if (s.is_object() && s.contains("span")) {
        arr.subspaces.push_back(Subspace::from_span(arr.ambient_dim, vectors_at(s["span"], arr.ambient_dim, where + ".span")));
      } else if (s.is_object() && s.contains("forms")) {
        arr.subspaces.push_back(Subspace::from_forms(arr.ambient_dim, vectors_at(s["forms"], arr.ambient_dim, where + ".forms")));
      } else {
        throw ParseError(where + ": expected 'span' or 'forms'");
      }
    }
    p.arrangement = std::move(arr);
  }
  if (doc.contains("experiment")) {
    const auto& e = doc["experiment"];
    if (!e.is_object() || !e.contains("w_generators") || !e.contains("v_dims"))
      throw ParseError("experiment: expected 'w_generators' and 'v_dims'");
    ExperimentSpec spec;
    const auto& gens = e["w_generators"];
    if (!gens.is_array() || gens.empty()) throw ParseError("experiment.w_generators: expected a non-empty list");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::optional<std::size_t> size;
      if (!spec.w_generators.empty()) size = spec.w_generators.front().rows();
      spec.w_generators.push_back(square_matrix_at(gens[i], size, "experiment.w_generators[" + std::to_string(i) + "]"));
    }
    if (!e["v_dims"].is_array()) throw ParseError("experiment.v_dims: expected a list");
    for (const auto& v : e["v_dims"]) {
      spec.v_dims.push_back(count_at(v, "experiment.v_dims"));
      if (spec.v_dims.back() == 0) throw ParseError("experiment.v_dims: dimensions must be positive");
    }
    p.experiment = std::move(spec);
  }
  return p;
}

ProblemFile load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open problem file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

CtxPtr make_context(const ProblemFile& problem, std::optional<std::size_t> cap_override) {
  const auto cap = cap_override ? cap_override : problem.cap;
  return AlgebraCtx::make(problem.variables, problem.rule, cap, problem.names);
}

}  // namespace skewinv
