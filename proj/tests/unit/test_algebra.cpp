#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewinv/algebra.hpp"
#include "skewinv/errors.hpp"
#include "test_support.hpp"

using namespace skewinv;
using skewinv::testing::Rng;

namespace {

CtxPtr exterior_xy() { return AlgebraCtx::make(2, SignRule::exterior, std::nullopt, {"x", "y"}); }
CtxPtr skew_xy(std::size_t cap = 4) { return AlgebraCtx::make(2, SignRule::skew_minus_one, cap, {"x", "y"}); }

}  // namespace

TEST_CASE("context construction") {
  CHECK(exterior_xy()->cap() == 2);
  CHECK(AlgebraCtx::make(3, SignRule::exterior, 7)->cap() == 3);
  CHECK_THROWS_AS(AlgebraCtx::make(0, SignRule::exterior), UsageError);
  CHECK_THROWS_AS(AlgebraCtx::make(2, SignRule::symmetric), UsageError);
  CHECK_THROWS_AS(AlgebraCtx::make(2, SignRule::exterior, std::nullopt, {"a"}), UsageError);
  CHECK(AlgebraCtx::make(2, SignRule::exterior)->names() == std::vector<std::string>{"x1", "x2"});
}

TEST_CASE("mul examples") {
  const auto e = AlgebraCtx::make(2, SignRule::exterior);
  const auto x1 = SkewPoly::variable(e, 0);
  const auto x2 = SkewPoly::variable(e, 1);
  CHECK(mul(x2, x1) == -mul(x1, x2));
  CHECK(mul(x1, x1).is_zero());

  const auto s = skew_xy();
  const auto f = parse_skew_poly(s, "x + y");
  CHECK(mul(f, f) == parse_skew_poly(s, "x^2 + y^2"));

  CHECK_THROWS_AS(mul(x1, SkewPoly::variable(s, 0)), UsageError);
}

TEST_CASE("mul truncates above the cap for capped rules") {
  const auto s = skew_xy(2);
  const auto x = SkewPoly::variable(s, 0);
  CHECK(mul(mul(x, x), x).is_zero());
}

TEST_CASE("monomial signs agree with a bubble-sort oracle") {
  Rng rng(21);
  for (auto rule : {SignRule::exterior, SignRule::skew_minus_one, SignRule::symmetric}) {
    const auto ctx = AlgebraCtx::make(4, rule, 6);
    for (int trial = 0; trial < 300; ++trial) {
      Monomial a{std::vector<std::uint16_t>(4, 0)};
      Monomial b{std::vector<std::uint16_t>(4, 0)};
      for (int k = rng.uniform(0, 3); k > 0; --k) ++a.exponents[rng.uniform(0, 3)];
      for (int k = rng.uniform(0, 3); k > 0; --k) ++b.exponents[rng.uniform(0, 3)];
      if (rule == SignRule::exterior && (!a.is_squarefree() || !b.is_squarefree())) continue;
      auto word = a.word();
      const auto wb = b.word();
      word.insert(word.end(), wb.begin(), wb.end());
      const int expected = skewinv::testing::bubble_sort_sign(rule, word);
      const auto got = multiply_monomials(*ctx, a, b);
      if (expected == 0) {
        CHECK_FALSE(got.has_value());
      } else {
        REQUIRE(got.has_value());
        CHECK(got->sign == expected);
      }
    }
  }
}

TEST_CASE("substitute examples") {
  // ⋀(x, y) -> ⋀(x) with y -> x.
  const auto source = exterior_xy();
  const auto target = AlgebraCtx::make(1, SignRule::exterior, std::nullopt, {"x"});
  const std::vector<LinearForm> delta{{{1}}, {{1}}};
  CHECK(substitute(parse_skew_poly(source, "y - x"), target, delta).is_zero());

  const std::vector<LinearForm> kill_y{{{1, 0}}, {{0, 0}}};
  CHECK(substitute(parse_skew_poly(source, "x∧y"), source, kill_y).is_zero());

  // Swap on the skew ring: xy -> yx = -xy.
  const auto s = skew_xy();
  const std::vector<LinearForm> swap{{{0, 1}}, {{1, 0}}};
  CHECK(substitute(parse_skew_poly(s, "x y"), s, swap) == parse_skew_poly(s, "-x y"));

  const std::vector<LinearForm> general{{{1, 1}}, {{0, 1}}};
  CHECK_THROWS_AS(substitute(parse_skew_poly(s, "x"), s, general), UnsupportedSubstitution);
  const std::vector<LinearForm> collapse{{{1, 0}}, {{1, 0}}};
  CHECK_THROWS_AS(substitute(parse_skew_poly(s, "x"), s, collapse), UnsupportedSubstitution);
  CHECK_THROWS_AS(substitute(parse_skew_poly(s, "x"), s, std::vector<LinearForm>{{{1, 0}}}), UsageError);
}

TEST_CASE("graded_basis examples") {
  const auto e2 = AlgebraCtx::make(2, SignRule::exterior);
  const auto b = graded_basis(*e2, 2);
  REQUIRE(b.size() == 1);
  CHECK(b[0].exponents == std::vector<std::uint16_t>{1, 1});
  CHECK(graded_basis(*AlgebraCtx::make(4, SignRule::exterior), 5).empty());

  const auto s = graded_basis(*skew_xy(), 2);
  REQUIRE(s.size() == 3);
  CHECK(s[0].exponents == std::vector<std::uint16_t>{2, 0});
  CHECK(s[1].exponents == std::vector<std::uint16_t>{1, 1});
  CHECK(s[2].exponents == std::vector<std::uint16_t>{0, 2});

  CHECK(graded_basis(*AlgebraCtx::make(5, SignRule::exterior), 2).size() == 10);
  CHECK_THROWS_AS(graded_basis(*skew_xy(3), 4), UsageError);
}

TEST_CASE("coordinates") {
  const auto e = exterior_xy();
  CHECK(to_coords(parse_skew_poly(e, "x + y"), 1) == skewinv::testing::vec({1, 1}));
  CHECK(to_coords(SkewPoly(e), 1) == skewinv::testing::vec({0, 0}));
  CHECK(from_coords(e, 2, skewinv::testing::vec({1})) == parse_skew_poly(e, "x∧y"));
  CHECK_THROWS_AS(to_coords(parse_skew_poly(e, "x + x∧y"), 1), UsageError);
}

TEST_CASE("render and parse") {
  const auto e = exterior_xy();
  CHECK(render(parse_skew_poly(e, "x∧y - 1/2 x + 3")) == "3 - 1/2 x + x∧y");
  CHECK(render(SkewPoly(e)) == "0");
  CHECK(parse_skew_poly(e, "y∧x") == parse_skew_poly(e, "-x∧y"));
  CHECK(parse_skew_poly(e, "2 x*y") == parse_skew_poly(e, "2 x∧y"));
  const auto s = skew_xy();
  CHECK(render(parse_skew_poly(s, "y x^2")) == "x^2 y");
  CHECK(render(parse_skew_poly(s, "y x")) == "-x y");
  CHECK_THROWS_AS(parse_skew_poly(e, "x + z"), ParseError);
  CHECK_THROWS_AS(parse_skew_poly(e, ""), ParseError);
  CHECK_THROWS_AS(parse_skew_poly(e, "x y + + y"), ParseError);
}

TEST_CASE("property: render/parse round trip") {
  Rng rng(22);
  for (auto rule : {SignRule::exterior, SignRule::skew_minus_one, SignRule::symmetric}) {
    const auto ctx = AlgebraCtx::make(3, rule, 4, {"a", "b1", "b10"});
    for (int trial = 0; trial < 100; ++trial) {
      const auto f = skewinv::testing::random_element(ctx, rng, rule == SignRule::exterior ? 3 : 4);
      CHECK(parse_skew_poly(ctx, render(f)) == f);
    }
  }
}

TEST_CASE("property: associativity under every rule") {
  Rng rng(23);
  for (auto rule : {SignRule::exterior, SignRule::skew_minus_one, SignRule::symmetric}) {
    const auto ctx = AlgebraCtx::make(4, rule, 6);
    for (int trial = 0; trial < 60; ++trial) {
      const auto a = skewinv::testing::random_homogeneous(ctx, rng.uniform(0, 2), rng);
      const auto b = skewinv::testing::random_homogeneous(ctx, rng.uniform(0, 2), rng);
      const auto c = skewinv::testing::random_homogeneous(ctx, rng.uniform(0, 2), rng);
      CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    }
  }
}

TEST_CASE("property: graded commutativity in the exterior algebra") {
  Rng rng(24);
  const auto ctx = AlgebraCtx::make(5, SignRule::exterior);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t p = rng.uniform(0, 3);
    const std::size_t q = rng.uniform(0, 3);
    const auto a = skewinv::testing::random_homogeneous(ctx, p, rng);
    const auto f = skewinv::testing::random_homogeneous(ctx, q, rng);
    CHECK(mul(a, f) == mul(f, a) * Rational((p * q) % 2 ? -1 : 1));
  }
}

TEST_CASE("property: distinct skew variables anticommute, squares survive") {
  const auto ctx = AlgebraCtx::make(3, SignRule::skew_minus_one, 4);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto xi = SkewPoly::variable(ctx, i);
    CHECK_FALSE(mul(xi, xi).is_zero());
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) CHECK(mul(xi, SkewPoly::variable(ctx, j)) == -mul(SkewPoly::variable(ctx, j), xi));
  }
}

TEST_CASE("property: substitution is multiplicative and composes") {
  Rng rng(25);
  for (auto rule : {SignRule::exterior, SignRule::symmetric}) {
    const auto ctx = AlgebraCtx::make(3, rule, 5);
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = skewinv::testing::random_matrix(3, rng);
      const auto b = skewinv::testing::random_matrix(3, rng);
      std::vector<LinearForm> ia, ib, iab;
      for (std::size_t i = 0; i < 3; ++i) {
        ia.push_back({a.row_vector(i)});
        ib.push_back({b.row_vector(i)});
        iab.push_back({(a * b).row_vector(i)});
      }
      const auto f = skewinv::testing::random_homogeneous(ctx, rng.uniform(0, 2), rng);
      const auto g = skewinv::testing::random_homogeneous(ctx, rng.uniform(0, 2), rng);
      CHECK(substitute(mul(f, g), ctx, ia) == mul(substitute(f, ctx, ia), substitute(g, ctx, ia)));
      // x_i -> sum_j a_ij x_j followed by x_j -> sum_k b_jk x_k is x_i -> sum_k (ab)_ik x_k.
      CHECK(substitute(substitute(f, ctx, ia), ctx, ib) == substitute(f, ctx, iab));
    }
  }
}
