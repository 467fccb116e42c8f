#include "skewinv/report.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "skewinv/errors.hpp"

namespace skewinv {

namespace {

using ojson = nlohmann::ordered_json;

ojson matrix_json(const MatrixQ& m) {
  ojson rows = ojson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson generators_json(const GeneratorSet& gens) {
  ojson out = ojson::array();
  for (const auto& g : gens.gens) out.push_back(ojson{{"degree", g.degree}, {"poly", render(g.poly)}});
  return out;
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + ")";
}

std::string join(const VectorQ& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + to_string(xs[i]);
  return out + ")";
}

void write_generators(std::ostream& os, const GeneratorSet& gens) {
  os << "  generators (" << gens.gens.size() << "):\n";
  for (const auto& g : gens.gens) os << "    [" << g.degree << "] " << render(g.poly) << "\n";
  os << "  beta: " << gens.beta << (gens.truncated ? " (complete only up to the cap)" : "") << "\n";
}

const ProblemFile& require_problem(const ProblemFile* problem, std::string_view command) {
  if (!problem) throw UsageError(std::string(command) + " needs a problem file");
  return *problem;
}

FiniteMatrixGroup problem_group(const ProblemFile& p, const RunOptions& o) {
  if (p.group_generators.empty()) return FiniteMatrixGroup::trivial(p.variables);
  return enumerate_group(p.group_generators, o.group_cap);
}

void run_group(const ProblemFile& p, const RunOptions& o, ojson& doc, std::ostream& text) {
  const auto group = problem_group(p, o);
  ojson elements = ojson::array();
  for (const auto& g : group.elements()) elements.push_back(matrix_json(g));
  doc["dimension"] = group.dim();
  doc["order"] = group.order();
  doc["signed_permutation"] = group.is_signed_permutation();
  doc["elements"] = std::move(elements);
  text << "group of order " << group.order() << " acting on Q^" << group.dim()
       << (group.is_signed_permutation() ? " (signed permutations)" : "") << "\n";
  for (std::size_t i = 0; i < group.order(); ++i) text << "  g" << i << " = " << matrix_json(group.elements()[i]).dump() << "\n";
}

void run_invariants(const ProblemFile& p, const RunOptions& o, ojson& doc, std::ostream& text) {
  const auto ctx = make_context(p, o.cap);
  const auto group = problem_group(p, o);
  const auto gens = o.method == Method::direct ? algebra_generators(group, ctx)
                                               : invariant_generators_via_arrangement(group, ctx);
  const auto dims = fixed_spaces(group, ctx, top_degree(*ctx)).dims();
  doc["rule"] = to_string(ctx->rule());
  doc["method"] = to_string(o.method);
  doc["order"] = group.order();
  doc["invariant_dims"] = dims;
  doc["generators"] = generators_json(gens);
  doc["beta"] = gens.beta;
  doc["truncated"] = gens.truncated;
  text << "invariants of a group of order " << group.order() << " (" << to_string(ctx->rule()) << ", "
       << to_string(o.method) << ")\n  invariant dims by degree: " << join(dims) << "\n";
  write_generators(text, gens);
}

bool run_molien(const ProblemFile& p, const RunOptions& o, ojson& doc, std::ostream& text) {
  const auto ctx = make_context(p, o.cap);
  const auto group = problem_group(p, o);
  const auto series = molien_series(group, ctx);
  const auto dims = fixed_spaces(group, ctx, top_degree(*ctx)).dims();
  bool agree = series.size() == dims.size();
  for (std::size_t d = 0; agree && d < dims.size(); ++d) agree = series[d] == Rational(dims[d]);
  ojson coeffs = ojson::array();
  for (const auto& c : series) coeffs.push_back(to_string(c));
  doc["rule"] = to_string(ctx->rule());
  doc["order"] = group.order();
  doc["series"] = std::move(coeffs);
  doc["invariant_dims"] = dims;
  doc["agree"] = agree;
  text << "Molien-type series: " << join(series) << "\n  fixed-space dims:  " << join(dims)
       << "\n  agreement: " << (agree ? "yes" : "NO") << "\n";
  return agree;
}

bool run_noether(const ProblemFile& p, const RunOptions& o, ojson& doc, std::ostream& text) {
  const auto ctx = make_context(p, o.cap);
  const auto group = problem_group(p, o);
  const auto report = noether_check(group, ctx, o.method);
  doc["rule"] = to_string(ctx->rule());
  doc["method"] = to_string(report.method);
  doc["order"] = report.group_order;
  doc["invariant_dims"] = report.invariant_dims;
  doc["generator_degrees"] = report.generators.degrees();
  doc["generators"] = generators_json(report.generators);
  doc["beta"] = report.beta;
  doc["bound"] = report.bound;
  doc["pass"] = report.pass;
  doc["asserted"] = report.asserted;
  doc["truncated"] = report.generators.truncated;
  text << "degree bound check (" << to_string(ctx->rule()) << ", " << to_string(report.method) << ")\n"
       << "  |G| = " << report.group_order << "\n  invariant dims by degree: " << join(report.invariant_dims) << "\n";
  write_generators(text, report.generators);
  text << "  beta <= |G|: " << (report.pass ? "yes" : "no") << (report.asserted ? "" : " (reported, not asserted)") << "\n";
  if (ctx->rule() == SignRule::skew_minus_one && group.is_signed_permutation()) {
    const auto probe = squarefree_probe(group, ctx);
    ojson entries = ojson::array();
    for (const auto& e : probe.entries) {
      entries.push_back(ojson{{"degree", e.degree}, {"poly", render(e.generator)}, {"squarefree", e.is_squarefree}});
      text << "  generator above |G|: [" << e.degree << "] " << render(e.generator)
           << (e.is_squarefree ? " square-free" : " not square-free") << "\n";
    }
    doc["squarefree_probe"] = ojson{{"generators", std::move(entries)},
                                    {"squarefree_invariant_degrees", probe.squarefree_invariant_degrees}};
    if (!probe.squarefree_invariant_degrees.empty())
      text << "  square-free invariants above |G| in degrees " << join(probe.squarefree_invariant_degrees) << "\n";
  }
  return !report.asserted || report.pass;
}

bool run_gansub(const ProblemFile& p, const RunOptions& o, ojson& doc, std::ostream& text) {
  const auto ctx = make_context(p, o.cap);
  const auto group = problem_group(p, o);
  const auto report = check_gansub(group, ctx);
  doc["order"] = group.order();
  doc["lhs_dims"] = report.lhs_dims;
  doc["rhs_dims"] = report.rhs_dims;
  doc["equal"] = report.equal;
  doc["all_equal"] = report.all_equal();
  text << "((I'(A_G) + (y)) ∩ ⋀(x))_d vs Hilbert ideal\n  d   lhs  rhs  equal\n";
  for (std::size_t d = 0; d < report.equal.size(); ++d)
    text << "  " << std::setw(2) << d << "  " << std::setw(3) << report.lhs_dims[d] << "  " << std::setw(3)
         << report.rhs_dims[d] << "  " << (report.equal[d] ? "yes" : "NO") << "\n";
  return report.all_equal();
}

bool run_arrangement(const ProblemFile* p, const RunOptions& o, ojson& doc, std::ostream& text) {
  if (p && p->arrangement) {
    const auto& arr = *p->arrangement;
    const auto ctx = AlgebraCtx::make(arr.ambient_dim, SignRule::exterior);
    const auto ideal = intersection_ideal(arr, ctx, arr.ambient_dim);
    const auto gens = minimal_generators(ideal);
    const bool within = gens.beta <= arr.subspaces.size();
    doc["ambient_dim"] = arr.ambient_dim;
    doc["subspaces"] = arr.subspaces.size();
    doc["ideal_dims"] = ideal.components.dims();
    doc["generators"] = generators_json(gens);
    doc["max_generator_degree"] = gens.beta;
    doc["within_bound"] = within;
    text << "intersection ideal of " << arr.subspaces.size() << " subspaces of Q^" << arr.ambient_dim
         << "\n  ideal dims by degree: " << join(ideal.components.dims()) << "\n";
    write_generators(text, gens);
    text << "  generated in degree <= t: " << (within ? "yes" : "NO") << "\n";
    return within;
  }
  constexpr std::size_t kTrials = 20;
  bool all = true;
  ojson trials = ojson::array();
  text << "random arrangement battery (seed " << o.seed << ")\n  trial  n  t  max degree\n";
  const auto battery = random_arrangement_battery(o.seed, kTrials);
  for (std::size_t i = 0; i < battery.size(); ++i) {
    const auto& trial = battery[i];
    const auto ctx = AlgebraCtx::make(trial.n, SignRule::exterior);
    const auto gens = minimal_generators(intersection_ideal(trial.arrangement, ctx, trial.n));
    const bool within = gens.beta <= trial.t;
    all = all && within;
    trials.push_back(ojson{{"n", trial.n}, {"t", trial.t}, {"max_generator_degree", gens.beta}, {"within_bound", within}});
    text << "  " << std::setw(5) << i << "  " << trial.n << "  " << trial.t << "  " << gens.beta << (within ? "" : "  VIOLATION")
         << "\n";
  }
  doc["seed"] = o.seed;
  doc["trials"] = std::move(trials);
  doc["all_within_bound"] = all;
  return all;
}

bool run_transfer(const ProblemFile& p, const RunOptions& o, ojson& doc, std::ostream& text) {
  if (!p.experiment) throw UsageError("transfer needs an 'experiment' section");
  const auto group = enumerate_group(p.experiment->w_generators, o.group_cap);
  const auto table = bound_transference_experiment(group, p.experiment->v_dims);
  ojson rows = ojson::array();
  text << "beta over W ⊗ V, |G| = " << table.group_order << "\n  dim V  beta_sym  beta_ext\n";
  for (const auto& r : table.rows) {
    rows.push_back(ojson{{"v_dim", r.v_dim}, {"beta_sym", r.beta_sym}, {"beta_ext", r.beta_ext}});
    text << "  " << std::setw(5) << r.v_dim << "  " << std::setw(8) << r.beta_sym << "  " << std::setw(8) << r.beta_ext << "\n";
  }
  doc["order"] = table.group_order;
  doc["rows"] = std::move(rows);
  doc["max_beta_sym"] = table.max_beta_sym;
  doc["max_beta_ext"] = table.max_beta_ext;
  doc["holds"] = table.holds;
  text << "  max beta_ext <= max beta_sym: " << (table.holds ? "yes" : "NO") << "\n";
  return table.holds;
}

bool run_examples(ojson& doc, std::ostream& text) {
  bool all = true;
  ojson results = ojson::array();
  for (const auto& r : run_builtin_examples()) {
    all = all && r.pass;
    results.push_back(ojson{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    text << "  " << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
  }
  doc["examples"] = std::move(results);
  doc["all_pass"] = all;
  return all;
}

// Generators must match `expected` term by term, in order.
bool same_generators(const GeneratorSet& gens, const std::vector<SkewPoly>& expected) {
  if (gens.gens.size() != expected.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i)
    if (!(gens.gens[i].poly == expected[i])) return false;
  return true;
}

std::vector<SkewPoly> polys(const CtxPtr& ctx, std::initializer_list<std::string_view> texts) {
  std::vector<SkewPoly> out;
  for (auto t : texts) out.push_back(parse_skew_poly(ctx, t));
  return out;
}

// The arrangement route must give the same degrees and generate every invariant.
bool arrangement_route_agrees(const FiniteMatrixGroup& group, const CtxPtr& ctx, const GeneratorSet& direct) {
  const auto via = invariant_generators_via_arrangement(group, ctx);
  if (via.degrees() != direct.degrees()) return false;
  const auto spans = subalgebra_graded_spans(via, ctx, ctx->n());
  for (std::size_t d = 0; d <= ctx->n(); ++d)
    if (!(spans[d] == fixed_space(group, ctx, d))) return false;
  return true;
}

MatrixQ diag(std::initializer_list<int> entries) {
  MatrixQ m(entries.size(), entries.size());
  std::size_t i = 0;
  for (int e : entries) {
    m(i, i) = e;
    ++i;
  }
  return m;
}

MatrixQ swap2() {
  MatrixQ m(2, 2);
  m(0, 1) = 1;
  m(1, 0) = 1;
  return m;
}

}  // namespace

std::vector<BuiltinResult> run_builtin_examples() {
  std::vector<BuiltinResult> out;
  {
    const auto ctx = AlgebraCtx::make(2, SignRule::exterior, std::nullopt, {"x", "y"});
    const auto group = enumerate_group({swap2()});
    const auto gens = algebra_generators(group, ctx);
    const bool pass = same_generators(gens, polys(ctx, {"x + y"})) && gens.beta == 1 &&
                      arrangement_route_agrees(group, ctx, gens);
    out.push_back({"swap", pass, "generators {x + y}, beta 1 <= |G| = 2"});
  }
  {
    const auto ctx = AlgebraCtx::make(2, SignRule::exterior, std::nullopt, {"x", "y"});
    const auto group = enumerate_group({diag({1, -1})});
    const auto gens = algebra_generators(group, ctx);
    const bool pass = same_generators(gens, polys(ctx, {"x"})) && gens.beta == 1 &&
                      arrangement_route_agrees(group, ctx, gens);
    out.push_back({"sign line", pass, "generators {x}, beta 1"});
  }
  {
    const auto ctx = AlgebraCtx::make(4, SignRule::exterior, std::nullopt, {"x1", "x2", "y1", "y2"});
    const auto group = enumerate_group({diag({1, 1, -1, -1})});
    const auto gens = algebra_generators(group, ctx);
    const bool pass = same_generators(gens, polys(ctx, {"x1", "x2", "y1∧y2"})) && gens.beta == 2 &&
                      group.order() == 2 &&
                      fixed_spaces(group, ctx, 4).dims() == std::vector<std::size_t>{1, 2, 2, 2, 1} &&
                      arrangement_route_agrees(group, ctx, gens);
    out.push_back({"two copies of the sign line", pass, "dims (1,2,2,2,1), generators {x1, x2, y1∧y2}, beta 2 = |G|"});
  }
  {
    const auto ctx = AlgebraCtx::make(2, SignRule::skew_minus_one, 4, {"x", "y"});
    const auto group = enumerate_group({swap2()});
    const auto f1 = parse_skew_poly(ctx, "x + y");
    const auto gens = algebra_generators(group, ctx);
    const bool pass = mul(f1, f1) == parse_skew_poly(ctx, "x^2 + y^2") &&
                      same_generators(gens, polys(ctx, {"x + y", "x^3 + y^3"})) && gens.beta == 3 &&
                      gens.beta > group.order();
    out.push_back({"skew swap", pass, "(x + y)^2 = x^2 + y^2, generators {x + y, x^3 + y^3}, beta 3 > |G| = 2"});
  }
  return out;
}

Report run(std::string_view command, const ProblemFile* problem, const RunOptions& options) {
  if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end())
    throw UsageError("unknown command '" + std::string(command) + "'");
  const auto start = std::chrono::steady_clock::now();
  ojson doc;
  doc["command"] = std::string(command);
  std::ostringstream text;
  bool ok = true;
  if (command == "group") {
    run_group(require_problem(problem, command), options, doc, text);
  } else if (command == "invariants") {
    run_invariants(require_problem(problem, command), options, doc, text);
  } else if (command == "molien") {
    ok = run_molien(require_problem(problem, command), options, doc, text);
  } else if (command == "noether") {
    ok = run_noether(require_problem(problem, command), options, doc, text);
  } else if (command == "gansub") {
    ok = run_gansub(require_problem(problem, command), options, doc, text);
  } else if (command == "arrangement") {
    ok = run_arrangement(problem, options, doc, text);
  } else if (command == "transfer") {
    ok = run_transfer(require_problem(problem, command), options, doc, text);
  } else {
    ok = run_examples(doc, text);
  }
  doc["ok"] = ok;
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  text << "elapsed: " << std::fixed << std::setprecision(1) << elapsed.count() << " ms\n";
  return Report{std::string(command), doc.dump(2) + "\n", text.str(), ok};
}

}  // namespace skewinv
