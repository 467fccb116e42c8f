// Python bindings.  Rationals cross the boundary as strings: inputs are passed
// through str() and parsed exactly, so ints, strings and fractions.Fraction all work.

#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skewinv/errors.hpp"
#include "skewinv/report.hpp"

namespace py = pybind11;
using namespace skewinv;

namespace {

Rational to_rational(const py::handle& obj) { return parse_rational(std::string(py::str(obj))); }

MatrixQ to_matrix(const py::sequence& rows) {
  const std::size_t r = rows.size();
  if (r == 0) throw UsageError("empty matrix");
  const std::size_t c = py::len(rows[0]);
  MatrixQ m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    const auto row = rows[i].cast<py::sequence>();
    if (row.size() != c) throw UsageError("ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = to_rational(row[j]);
  }
  return m;
}

std::vector<std::vector<std::string>> from_matrix(const MatrixQ& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(to_string(m(i, j)));
  return out;
}

std::vector<std::string> from_vector(const VectorQ& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

// Owns the context so polynomials can outlive the Python Algebra object.
struct Algebra {
  CtxPtr ctx;
};

py::dict generators_dict(const GeneratorSet& gens) {
  py::list polys;
  for (const auto& g : gens.gens) polys.append(render(g.poly));
  py::dict d;
  d["generators"] = polys;
  d["degrees"] = gens.degrees();
  d["beta"] = gens.beta;
  d["truncated"] = gens.truncated;
  return d;
}

}  // namespace

PYBIND11_MODULE(skewinv, m) {
  m.doc() = "Invariants of finite matrix groups acting on exterior, skew and symmetric algebras";

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UnsupportedSubstitution>(m, "UnsupportedSubstitution", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  py::class_<Algebra>(m, "Algebra")
      .def(py::init([](std::size_t n, const std::string& rule, std::optional<std::size_t> cap,
                       std::vector<std::string> names) {
             return Algebra{AlgebraCtx::make(n, parse_sign_rule(rule), cap, std::move(names))};
           }),
           py::arg("n"), py::arg("rule") = "exterior", py::arg("cap") = py::none(),
           py::arg("names") = std::vector<std::string>{})
      .def_property_readonly("n", [](const Algebra& a) { return a.ctx->n(); })
      .def_property_readonly("rule", [](const Algebra& a) { return std::string(to_string(a.ctx->rule())); })
      .def_property_readonly("cap", [](const Algebra& a) { return a.ctx->cap(); })
      .def("graded_dim", [](const Algebra& a, std::size_t d) { return a.ctx->graded_dim(d); })
      .def("basis",
           [](const Algebra& a, std::size_t d) {
             std::vector<std::string> out;
             for (const auto& mono : a.ctx->basis(d).monomials) out.push_back(render(SkewPoly::monomial(a.ctx, mono)));
             return out;
           })
      .def("parse", [](const Algebra& a, const std::string& text) { return parse_skew_poly(a.ctx, text); })
      .def("variable", [](const Algebra& a, std::size_t i) { return SkewPoly::variable(a.ctx, i); });

  py::class_<SkewPoly>(m, "SkewPoly")
      .def("__str__", [](const SkewPoly& f) { return render(f); })
      .def("__repr__", [](const SkewPoly& f) { return "SkewPoly('" + render(f) + "')"; })
      .def("__add__", [](const SkewPoly& f, const SkewPoly& g) { return f + g; })
      .def("__sub__", [](const SkewPoly& f, const SkewPoly& g) { return f - g; })
      .def("__mul__", [](const SkewPoly& f, const SkewPoly& g) { return f * g; })
      .def("__mul__", [](const SkewPoly& f, const py::object& c) { return f * to_rational(c); })
      .def("__rmul__", [](const SkewPoly& f, const py::object& c) { return f * to_rational(c); })
      .def("__neg__", [](const SkewPoly& f) { return -f; })
      .def("__eq__", [](const SkewPoly& f, const SkewPoly& g) { return f == g; })
      .def("is_zero", &SkewPoly::is_zero)
      .def("degree", &SkewPoly::homogeneous_degree)
      .def("component", &SkewPoly::component);

  py::class_<FiniteMatrixGroup>(m, "Group")
      .def(py::init([](const py::sequence& generators, std::size_t cap) {
             std::vector<MatrixQ> gens;
             for (const auto& g : generators) gens.push_back(to_matrix(g.cast<py::sequence>()));
             return enumerate_group(std::move(gens), cap);
           }),
           py::arg("generators"), py::arg("cap") = kDefaultGroupCap)
      .def_property_readonly("order", &FiniteMatrixGroup::order)
      .def_property_readonly("dim", &FiniteMatrixGroup::dim)
      .def("elements",
           [](const FiniteMatrixGroup& g) {
             std::vector<std::vector<std::vector<std::string>>> out;
             for (const auto& e : g.elements()) out.push_back(from_matrix(e));
             return out;
           })
      .def("is_signed_permutation", &FiniteMatrixGroup::is_signed_permutation);

  m.def("act", [](const py::sequence& g, const SkewPoly& f) { return act(to_matrix(g), f); }, py::arg("matrix"),
        py::arg("poly"));
  m.def("reynolds", &reynolds, py::arg("group"), py::arg("poly"));
  m.def(
      "fixed_space_dims",
      [](const FiniteMatrixGroup& g, const Algebra& a) { return fixed_spaces(g, a.ctx, top_degree(*a.ctx)).dims(); },
      py::arg("group"), py::arg("algebra"));
  m.def(
      "molien_series", [](const FiniteMatrixGroup& g, const Algebra& a) { return from_vector(molien_series(g, a.ctx)); },
      py::arg("group"), py::arg("algebra"));
  m.def(
      "invariant_generators",
      [](const FiniteMatrixGroup& g, const Algebra& a, const std::string& method) {
        return generators_dict(parse_method(method) == Method::direct ? algebra_generators(g, a.ctx)
                                                                      : invariant_generators_via_arrangement(g, a.ctx));
      },
      py::arg("group"), py::arg("algebra"), py::arg("method") = "direct");
  m.def(
      "noether_check",
      [](const FiniteMatrixGroup& g, const Algebra& a, const std::string& method) {
        const auto r = noether_check(g, a.ctx, parse_method(method));
        auto d = generators_dict(r.generators);
        d["order"] = r.group_order;
        d["bound"] = r.bound;
        d["pass"] = r.pass;
        d["asserted"] = r.asserted;
        d["invariant_dims"] = r.invariant_dims;
        return d;
      },
      py::arg("group"), py::arg("algebra"), py::arg("method") = "direct");
  m.def(
      "check_gansub",
      [](const FiniteMatrixGroup& g, const Algebra& a) {
        const auto r = check_gansub(g, a.ctx);
        py::dict d;
        d["lhs_dims"] = r.lhs_dims;
        d["rhs_dims"] = r.rhs_dims;
        d["equal"] = r.equal;
        d["all_equal"] = r.all_equal();
        return d;
      },
      py::arg("group"), py::arg("algebra"));
  m.def(
      "arrangement_generators",
      [](std::size_t ambient_dim, const std::vector<py::sequence>& spans) {
        Arrangement arr{ambient_dim, {}};
        for (const auto& s : spans) {
          std::vector<VectorQ> vectors;
          for (const auto& v : s) {
            VectorQ row;
            for (const auto& x : v.cast<py::sequence>()) row.push_back(to_rational(x));
            vectors.push_back(std::move(row));
          }
          arr.subspaces.push_back(Subspace::from_span(ambient_dim, vectors));
        }
        const auto ctx = AlgebraCtx::make(ambient_dim, SignRule::exterior);
        return generators_dict(minimal_generators(intersection_ideal(arr, ctx, ambient_dim)));
      },
      py::arg("ambient_dim"), py::arg("spans"));
  m.def(
      "transfer",
      [](const FiniteMatrixGroup& g, const std::vector<std::size_t>& v_dims) {
        const auto t = bound_transference_experiment(g, v_dims);
        py::list rows;
        for (const auto& r : t.rows) {
          py::dict row;
          row["v_dim"] = r.v_dim;
          row["beta_sym"] = r.beta_sym;
          row["beta_ext"] = r.beta_ext;
          rows.append(row);
        }
        py::dict d;
        d["rows"] = rows;
        d["max_beta_sym"] = t.max_beta_sym;
        d["max_beta_ext"] = t.max_beta_ext;
        d["holds"] = t.holds;
        return d;
      },
      py::arg("group"), py::arg("v_dims"));
  m.def(
      "run",
      [](const std::string& command, std::optional<std::string> problem_json, const std::string& method,
         std::optional<std::size_t> cap, std::uint64_t seed) {
        std::optional<ProblemFile> problem;
        if (problem_json) problem = parse_problem(*problem_json);
        RunOptions o;
        o.method = parse_method(method);
        o.cap = cap;
        o.seed = seed;
        const auto r = run(command, problem ? &*problem : nullptr, o);
        py::dict d;
        d["json"] = r.json;
        d["text"] = r.text;
        d["ok"] = r.ok;
        return d;
      },
      py::arg("command"), py::arg("problem_json") = py::none(), py::arg("method") = "direct",
      py::arg("cap") = py::none(), py::arg("seed") = 1);
}
