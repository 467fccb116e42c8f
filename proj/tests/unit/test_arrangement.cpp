#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewinv/arrangement.hpp"
#include "skewinv/errors.hpp"
#include "test_support.hpp"

using namespace skewinv;
using skewinv::testing::diagonal;
using skewinv::testing::matrix;
using skewinv::testing::vec;

namespace {

CtxPtr ext(std::vector<std::string> names) {
  const auto n = names.size();
  return AlgebraCtx::make(n, SignRule::exterior, std::nullopt, std::move(names));
}

RowBasis poly_span(const CtxPtr& ctx, std::size_t d, std::initializer_list<const char*> texts) {
  std::vector<VectorQ> rows;
  for (auto t : texts) rows.push_back(to_coords(parse_skew_poly(ctx, t), d));
  return RowBasis::span_of(ctx->graded_dim(d), rows);
}

FiniteMatrixGroup minus_one() { return enumerate_group({diagonal({-1})}); }

std::size_t max_generator_degree(const GeneratorSet& gens) {
  std::size_t top = 0;
  for (const auto& g : gens.gens) top = std::max(top, g.degree);
  return top;
}

}  // namespace

TEST_CASE("vanishing_forms examples") {
  CHECK(vanishing_forms(2, {vec({1, 1})}) == RowBasis::span_of(2, {vec({1, -1})}));
  CHECK(vanishing_forms(2, {vec({1, 0}), vec({0, 1})}).is_zero());
  CHECK(vanishing_forms(2, {}) == RowBasis::full(2));
}

TEST_CASE("subspace construction keeps span and forms mutually annihilating") {
  const auto w = Subspace::from_span(3, {vec({1, 2, 3})});
  CHECK(w.span.dim() + w.forms.dim() == 3);
  for (std::size_t i = 0; i < w.forms.dim(); ++i) CHECK(w.forms.row(i)[0] + 2 * w.forms.row(i)[1] + 3 * w.forms.row(i)[2] == 0);
  const auto u = Subspace::from_forms(3, {vec({1, 0, -1})});
  CHECK(u.span.dim() == 2);
}

TEST_CASE("group_arrangement examples") {
  auto a = group_arrangement(FiniteMatrixGroup::trivial(1));
  REQUIRE(a.subspaces.size() == 1);
  CHECK(a.ambient_dim == 2);
  CHECK(a.subspaces[0].equations == matrix({{-1, 1}}));

  a = group_arrangement(minus_one());
  REQUIRE(a.subspaces.size() == 2);
  CHECK(a.subspaces[0].equations == matrix({{-1, 1}}));
  CHECK(a.subspaces[1].equations == matrix({{1, 1}}));

  a = group_arrangement(enumerate_group({matrix({{0, 1}, {1, 0}})}));
  REQUIRE(a.subspaces.size() == 2);
  CHECK(a.subspaces[1].equations == matrix({{0, -1, 1, 0}, {-1, 0, 0, 1}}));
}

TEST_CASE("linear_ideal_component examples") {
  const auto xy = ext({"x", "y"});
  const LinearIdeal j{RowBasis::span_of(2, {vec({-1, 1})})};
  CHECK(linear_ideal_component(j, xy, 2) == poly_span(xy, 2, {"x∧y"}));
  CHECK(linear_ideal_component(j, xy, 1) == j.forms);
  CHECK(linear_ideal_component(LinearIdeal{RowBasis(2)}, xy, 1).is_zero());
}

TEST_CASE("intersection_ideal examples") {
  const auto xy = ext({"x", "y"});
  const auto a = group_arrangement(minus_one());
  const auto ideal = intersection_ideal(a, xy, 2);
  CHECK(ideal.components[0].is_zero());
  CHECK(ideal.components[1].is_zero());
  CHECK(ideal.components[2] == poly_span(xy, 2, {"x∧y"}));

  Arrangement single{2, {a.subspaces[1]}};
  const LinearIdeal j{a.subspaces[1].forms};
  const auto one = intersection_ideal(single, xy, 2);
  for (std::size_t d = 1; d <= 2; ++d) CHECK(one.components[d] == linear_ideal_component(j, xy, d));

  Arrangement doubled = a;
  doubled.subspaces.push_back(a.subspaces[0]);
  CHECK(intersection_ideal(doubled, xy, 2).components == ideal.components);
}

TEST_CASE("minimal_generators examples") {
  const auto xy = ext({"x", "y"});
  auto gens = minimal_generators(intersection_ideal(group_arrangement(minus_one()), xy, 2));
  REQUIRE(gens.gens.size() == 1);
  CHECK(gens.gens[0].degree == 2);
  CHECK(gens.gens[0].poly == parse_skew_poly(xy, "x∧y"));

  const auto x12 = AlgebraCtx::make(2, SignRule::exterior);
  gens = minimal_generators(ideal_from_generators({parse_skew_poly(x12, "x1")}, x12, 2));
  REQUIRE(gens.gens.size() == 1);
  CHECK(gens.gens[0].poly == parse_skew_poly(x12, "x1"));

  gens = minimal_generators(ideal_from_generators({parse_skew_poly(x12, "x1"), parse_skew_poly(x12, "x1∧x2")}, x12, 2));
  REQUIRE(gens.gens.size() == 1);
  CHECK(gens.gens[0].poly == parse_skew_poly(x12, "x1"));
}

TEST_CASE("random arrangements are reproducible") {
  const auto a = random_arrangement(4, 3, 99);
  const auto b = random_arrangement(4, 3, 99);
  REQUIRE(a.subspaces.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(a.subspaces[i].span == b.subspaces[i].span);
    CHECK(a.subspaces[i].span.dim() >= 1);
    CHECK(a.subspaces[i].span.dim() <= 3);
  }
}

TEST_CASE("property: ideal, regeneration and generator-degree bound on random arrangements") {
  for (const auto& trial : random_arrangement_battery(7, 9)) {
    CAPTURE(trial.n);
    CAPTURE(trial.t);
    const auto ctx = AlgebraCtx::make(trial.n, SignRule::exterior);
    const auto ideal = intersection_ideal(trial.arrangement, ctx, trial.n);
    for (std::size_t d = 1; d <= trial.n; ++d)
      CHECK(ideal.components[d].contains(degree_one_multiples(ideal.components[d - 1], ctx, d)));
    const auto gens = minimal_generators(ideal);
    CHECK(max_generator_degree(gens) <= trial.t);
    std::vector<SkewPoly> polys;
    for (const auto& g : gens.gens) polys.push_back(g.poly);
    CHECK(ideal_from_generators(polys, ctx, trial.n).components.components == ideal.components.components);
  }
}

TEST_CASE("property: group arrangement ideals vanish on every graph") {
  for (const auto& [name, group, ctx] : skewinv::testing::battery()) {
    CAPTURE(name);
    const std::size_t n = group.dim();
    const auto xy = AlgebraCtx::make(2 * n, SignRule::exterior);
    const auto x = AlgebraCtx::make(n, SignRule::exterior);
    const auto ideal = intersection_ideal(group_arrangement(group), xy, 2 * n);
    for (const auto& g : group.elements()) {
      // x_i -> x_i, y_i -> (A(g) x)_i
      std::vector<LinearForm> images;
      for (std::size_t i = 0; i < n; ++i) {
        VectorQ e(n);
        e[i] = 1;
        images.push_back(LinearForm{e});
      }
      for (const auto& row : variable_images(g)) images.push_back(row);
      for (std::size_t d = 1; d <= 2 * n; ++d)
        for (std::size_t r = 0; r < ideal.components[d].dim(); ++r) {
          const auto f = from_coords(xy, d, ideal.components[d].row(r));
          CHECK(substitute(f, x, images).is_zero());
        }
    }
  }
}
