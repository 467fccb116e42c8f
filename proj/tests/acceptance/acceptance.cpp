// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "skewinv/pipeline.hpp"
#include "test_support.hpp"

using namespace skewinv;
using skewinv::testing::diagonal;
using skewinv::testing::matrix;
using skewinv::testing::Rng;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures; the first failing check's message is kept.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && pass_) {
      pass_ = false;
      first_failure_ = what;
    }
  }
  Outcome outcome(std::string detail) const {
    if (!pass_) return {false, "first failure: " + first_failure_};
    return {true, detail + " (" + std::to_string(checks_) + " checks)"};
  }

 private:
  bool pass_ = true;
  std::size_t checks_ = 0;
  std::string first_failure_;
};

CtxPtr ext(std::vector<std::string> names) {
  const auto n = names.size();
  return AlgebraCtx::make(n, SignRule::exterior, std::nullopt, std::move(names));
}

std::vector<SkewPoly> polys(const CtxPtr& ctx, std::initializer_list<const char*> texts) {
  std::vector<SkewPoly> out;
  for (auto t : texts) out.push_back(parse_skew_poly(ctx, t));
  return out;
}

bool same_generators(const GeneratorSet& gens, const std::vector<SkewPoly>& expected) {
  if (gens.gens.size() != expected.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i)
    if (!(gens.gens[i].poly == expected[i])) return false;
  return true;
}

std::vector<std::size_t> generated_dims(const GeneratorSet& gens, const CtxPtr& ctx) {
  std::vector<std::size_t> dims;
  for (const auto& s : subalgebra_graded_spans(gens, ctx, ctx->n())) dims.push_back(s.dim());
  return dims;
}

Outcome two_copies() {
  Checker c;
  const auto ctx = ext({"x1", "x2", "y1", "y2"});
  const auto group = enumerate_group({diagonal({1, 1, -1, -1})});
  c.expect(fixed_spaces(group, ctx, 4).dims() == std::vector<std::size_t>{1, 2, 2, 2, 1}, "dims (1,2,2,2,1)");
  const auto gens = algebra_generators(group, ctx);
  c.expect(same_generators(gens, polys(ctx, {"x1", "x2", "y1∧y2"})), "generators {x1, x2, y1∧y2}");
  c.expect(gens.beta == 2 && group.order() == 2, "beta = |G| = 2");
  return c.outcome("dims (1,2,2,2,1), generators {x1, x2, y1∧y2}, beta 2 = |G|");
}

Outcome sign_line() {
  Checker c;
  const auto ctx = ext({"x", "y"});
  const auto gens = algebra_generators(enumerate_group({diagonal({1, -1})}), ctx);
  c.expect(same_generators(gens, polys(ctx, {"x"})), "generators {x}");
  c.expect(gens.beta == 1, "beta 1");
  return c.outcome("generators {x}, beta 1");
}

Outcome skew_swap() {
  Checker c;
  const auto ctx = AlgebraCtx::make(2, SignRule::skew_minus_one, 4, {"x", "y"});
  const auto group = enumerate_group({matrix({{0, 1}, {1, 0}})});
  const auto f1 = parse_skew_poly(ctx, "x + y");
  c.expect(f1 * f1 == parse_skew_poly(ctx, "x^2 + y^2"), "(x + y)^2 = x^2 + y^2");
  const auto gens = algebra_generators(group, ctx);
  c.expect(same_generators(gens, polys(ctx, {"x + y", "x^3 + y^3"})), "generators {x + y, x^3 + y^3}");
  c.expect(gens.beta == 3 && gens.beta > group.order(), "beta 3 > |G| = 2");
  return c.outcome("(x + y)^2 = x^2 + y^2, generators {x + y, x^3 + y^3}, beta 3 > 2");
}

Outcome noether_battery() {
  Checker c;
  for (const auto& [name, group, ctx] : skewinv::testing::battery()) {
    const auto direct = noether_check(group, ctx, Method::direct);
    const auto arr = noether_check(group, ctx, Method::arrangement);
    c.expect(direct.pass, name + ": direct beta <= |G|");
    c.expect(arr.pass, name + ": arrangement beta <= |G|");
    c.expect(generated_dims(arr.generators, ctx) == direct.invariant_dims, name + ": arrangement generates E^G");
  }
  return c.outcome("6 groups, both methods");
}

Outcome hilbert_ideal_equality() {
  Checker c;
  for (const auto& [name, group, ctx] : skewinv::testing::battery()) {
    const auto report = check_gansub(group, ctx);
    c.expect(report.equal.size() == 2 * ctx->n() + 1, name + ": degrees 0..2n");
    for (std::size_t d = 0; d < report.equal.size(); ++d)
      c.expect(report.equal[d], name + ": degree " + std::to_string(d));
  }
  return c.outcome("6 groups, every degree d <= 2n");
}

Outcome arrangement_degrees() {
  Checker c;
  for (const auto& trial : random_arrangement_battery(2024, 20)) {
    const auto ctx = AlgebraCtx::make(trial.n, SignRule::exterior);
    const auto gens = minimal_generators(intersection_ideal(trial.arrangement, ctx, trial.n));
    c.expect(gens.beta <= trial.t, "n=" + std::to_string(trial.n) + " t=" + std::to_string(trial.t));
  }
  return c.outcome("20 seeded arrangements, n in {3,4,5}, t in {2,3,4}");
}

Outcome molien() {
  Checker c;
  for (const auto& [name, group, ctx] : skewinv::testing::battery()) {
    const auto series = molien_series(group, ctx);
    for (std::size_t d = 0; d <= ctx->n(); ++d)
      c.expect(series[d] == Rational(fixed_space(group, ctx, d).dim()), name + ": exterior degree " + std::to_string(d));
    const auto sym = AlgebraCtx::make(ctx->n(), SignRule::symmetric, ctx->n());
    const auto sym_series = molien_series(group, sym);
    for (std::size_t d = 0; d <= ctx->n(); ++d)
      c.expect(sym_series[d] == Rational(fixed_space(group, sym, d).dim()), name + ": symmetric degree " + std::to_string(d));
  }
  return c.outcome("6 groups, exterior and symmetric, degrees 0..n");
}

Outcome reynolds_axioms() {
  Checker c;
  Rng rng(8);
  constexpr int kInstances = 100;
  for (const auto& [name, group, ctx] : skewinv::testing::battery()) {
    const auto top = ctx->n();
    for (int i = 0; i < kInstances; ++i) {
      const auto f = skewinv::testing::random_element(ctx, rng, top);
      const auto r = reynolds(group, f);
      c.expect(reynolds(group, r) == r, name + ": idempotence");
      bool fixed = true;
      for (const auto& g : group.generators()) fixed = fixed && act(g, r) == r;
      c.expect(fixed, name + ": image is invariant");
      const auto& g = group.elements()[rng.uniform(0, group.order() - 1)];
      c.expect(reynolds(group, act(g, f)) == r, name + ": averaging invariance");
      const auto a = reynolds(group, skewinv::testing::random_element(ctx, rng, top));
      const auto b = reynolds(group, skewinv::testing::random_element(ctx, rng, top));
      c.expect(reynolds(group, a * f * b) == a * r * b, name + ": bimodule identity");
    }
    // The image is all of the fixed space: every fixed basis vector is its own average.
    for (std::size_t d = 0; d <= top; ++d) {
      const auto fixed = fixed_space(group, ctx, d);
      for (std::size_t k = 0; k < fixed.dim(); ++k) {
        const auto v = from_coords(ctx, d, fixed.row(k));
        c.expect(reynolds(group, v) == v, name + ": fixed space in the image");
      }
    }
  }
  return c.outcome("100 instances per group");
}

Outcome algebra_kernel() {
  Checker c;
  Rng rng(9);
  constexpr int kInstances = 200;
  const std::vector<CtxPtr> contexts{AlgebraCtx::make(4, SignRule::exterior),
                                     AlgebraCtx::make(3, SignRule::skew_minus_one, 5),
                                     AlgebraCtx::make(3, SignRule::symmetric, 5)};
  for (const auto& ctx : contexts) {
    const std::string rule(to_string(ctx->rule()));
    const std::size_t low = std::min<std::size_t>(ctx->n(), 2);
    for (int i = 0; i < kInstances; ++i) {
      const auto f = skewinv::testing::random_element(ctx, rng, low);
      const auto g = skewinv::testing::random_element(ctx, rng, low);
      const auto h = skewinv::testing::random_element(ctx, rng, 1);
      c.expect((f * g) * h == f * (g * h), rule + ": associativity");

      const std::size_t p = rng.uniform(0, low);
      const std::size_t q = rng.uniform(0, low);
      if (ctx->rule() == SignRule::skew_minus_one) {
        // Only distinct variables anticommute: the sign is (-1)^(pq - <a,b>) monomial by monomial.
        const auto& pb = ctx->basis(p).monomials;
        const auto& qb = ctx->basis(q).monomials;
        const auto& ma = pb[rng.uniform(0, static_cast<long>(pb.size()) - 1)];
        const auto& mb = qb[rng.uniform(0, static_cast<long>(qb.size()) - 1)];
        std::size_t shared = 0;
        for (std::size_t k = 0; k < ctx->n(); ++k) shared += std::size_t{ma.exponents[k]} * mb.exponents[k];
        auto twisted = SkewPoly::monomial(ctx, mb) * SkewPoly::monomial(ctx, ma);
        if ((p * q - shared) % 2 == 1) twisted = -twisted;
        c.expect(SkewPoly::monomial(ctx, ma) * SkewPoly::monomial(ctx, mb) == twisted, rule + ": graded commutativity");
      } else {
        const auto a = skewinv::testing::random_homogeneous(ctx, p, rng);
        const auto b = skewinv::testing::random_homogeneous(ctx, q, rng);
        auto twisted = b * a;
        if (ctx->rule() == SignRule::exterior && (p * q) % 2 == 1) twisted = -twisted;
        c.expect(a * b == twisted, rule + ": graded commutativity");
      }

      const auto m = ctx->rule() == SignRule::skew_minus_one ? skewinv::testing::random_signed_permutation(ctx->n(), rng)
                                                           : skewinv::testing::random_matrix(ctx->n(), rng);
      const auto m2 = ctx->rule() == SignRule::skew_minus_one ? skewinv::testing::random_signed_permutation(ctx->n(), rng)
                                                            : skewinv::testing::random_matrix(ctx->n(), rng);
      c.expect(act(m, f * g) == act(m, f) * act(m, g), rule + ": substitution multiplicativity");
      c.expect(act(m, act(m2, f)) == act(m2 * m, f), rule + ": right-action composition");
    }
  }
  return c.outcome("200 instances per rule");
}

Outcome transference() {
  Checker c;
  const std::vector<std::size_t> dims{1, 2, 3};
  const auto table = bound_transference_experiment(enumerate_group({diagonal({-1})}), dims);
  std::vector<std::size_t> sym, ext_betas;
  for (const auto& row : table.rows) {
    sym.push_back(row.beta_sym);
    ext_betas.push_back(row.beta_ext);
  }
  c.expect(sym == std::vector<std::size_t>{2, 2, 2}, "beta_sym = (2,2,2)");
  c.expect(ext_betas == std::vector<std::size_t>{0, 2, 2}, "beta_ext = (0,2,2)");
  c.expect(table.max_beta_ext <= table.max_beta_sym && table.holds, "max beta_ext <= max beta_sym");
  return c.outcome("beta_sym (2,2,2), beta_ext (0,2,2)");
}

struct Criterion {
  int number;
  std::string name;
  std::function<Outcome()> run;
  double limit_seconds;  // 0 means no time limit
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "two copies of the sign line", two_copies, 1.0},
      {2, "sign line", sign_line, 1.0},
      {3, "skew swap beyond the bound", skew_swap, 1.0},
      {4, "Noether battery, both methods", noether_battery, 60.0},
      {5, "Hilbert ideal from the group arrangement", hilbert_ideal_equality, 0.0},
      {6, "arrangement generator degrees", arrangement_degrees, 60.0},
      {7, "Molien coefficients", molien, 0.0},
      {8, "Reynolds axioms", reynolds_axioms, 0.0},
      {9, "algebra kernel laws", algebra_kernel, 0.0},
      {10, "bound transference", transference, 10.0},
  };
  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.limit_seconds > 0 && seconds >= criterion.limit_seconds) {
      outcome.pass = false;
      outcome.detail += "; over the time limit";
    }
    failures += outcome.pass ? 0 : 1;
    std::ostringstream timing;
    timing << std::fixed << std::setprecision(3) << seconds << " s";
    if (criterion.limit_seconds > 0) timing << " < " << criterion.limit_seconds << " s";
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  [" << std::setw(2) << criterion.number << "] " << criterion.name
              << ": " << outcome.detail << " [" << timing.str() << "]\n";
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
