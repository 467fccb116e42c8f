#include "skewinv/arrangement.hpp"

#include <random>

#include "skewinv/errors.hpp"

namespace skewinv {

Subspace Subspace::from_span(std::size_t ambient_dim, const std::vector<VectorQ>& vectors) {
  Subspace s;
  s.span = RowBasis::span_of(ambient_dim, vectors);
  s.forms = vanishing_forms(ambient_dim, vectors);
  s.equations = s.forms.rows();
  return s;
}

Subspace Subspace::from_forms(std::size_t ambient_dim, const std::vector<VectorQ>& forms) {
  Subspace s;
  s.equations = MatrixQ::from_rows(ambient_dim, forms);
  s.forms = RowBasis::span_of(s.equations);
  s.span = kernel_basis(s.equations);
  return s;
}

RowBasis vanishing_forms(std::size_t ambient_dim, const std::vector<VectorQ>& spanning) {
  return kernel_basis(MatrixQ::from_rows(ambient_dim, spanning));
}

Arrangement group_arrangement(const FiniteMatrixGroup& group) {
  const std::size_t n = group.dim();
  Arrangement out{2 * n, {}};
  for (const auto& g : group.elements()) {
    std::vector<VectorQ> forms;
    for (std::size_t i = 0; i < n; ++i) {
      VectorQ f(2 * n);
      for (std::size_t j = 0; j < n; ++j) f[j] = -g(i, j);
      f[n + i] = 1;
      forms.push_back(std::move(f));
    }
    out.subspaces.push_back(Subspace::from_forms(2 * n, forms));
  }
  return out;
}

RowBasis linear_ideal_component(const LinearIdeal& ideal, const CtxPtr& ctx, std::size_t d) {
  if (d == 0) throw UsageError("linear ideals have no degree-0 part");
  if (ideal.forms.ambient_dim() != ctx->n()) throw UsageError("form length does not match the number of variables");
  if (ctx->rule() != SignRule::exterior && d > ctx->cap()) throw UsageError("degree exceeds the cap");
  const auto& lower = ctx->basis(d - 1);
  MatrixQ rows(0, ctx->graded_dim(d));
  for (std::size_t k = 0; k < ideal.forms.dim(); ++k) {
    const auto form = SkewPoly::linear(ctx, LinearForm{ideal.forms.row(k)});
    for (const auto& m : lower.monomials) rows.append_row(to_coords(mul(SkewPoly::monomial(ctx, m), form), d));
  }
  return RowBasis::span_of(rows);
}

GradedIdeal intersection_ideal(const Arrangement& arrangement, const CtxPtr& ctx, std::size_t max_degree) {
  if (arrangement.ambient_dim != ctx->n()) throw UsageError("arrangement dimension does not match the algebra");
  if (arrangement.subspaces.empty()) throw UsageError("empty arrangement");
  GradedIdeal out{GradedSubspace{ctx, {RowBasis(1)}}, std::nullopt};
  for (std::size_t d = 1; d <= max_degree; ++d) {
    std::vector<RowBasis> pieces;
    pieces.reserve(arrangement.subspaces.size());
    for (const auto& s : arrangement.subspaces) pieces.push_back(linear_ideal_component(LinearIdeal{s.forms}, ctx, d));
    out.components.components.push_back(intersect_row_spaces(pieces));
  }
  return out;
}

RowBasis degree_one_multiples(const RowBasis& basis, const CtxPtr& ctx, std::size_t d) {
  MatrixQ rows(0, ctx->graded_dim(d));
  if (d == 0) return RowBasis::span_of(rows);
  for (std::size_t k = 0; k < basis.dim(); ++k) {
    const auto b = from_coords(ctx, d - 1, basis.rows().row(k));
    for (std::size_t i = 0; i < ctx->n(); ++i) rows.append_row(to_coords(mul(SkewPoly::variable(ctx, i), b), d));
  }
  return RowBasis::span_of(rows);
}

GradedIdeal ideal_from_generators(const std::vector<SkewPoly>& gens, const CtxPtr& ctx, std::size_t max_degree) {
  GradedIdeal out{GradedSubspace{ctx, {}}, std::nullopt};
  GeneratorSet set;
  for (const auto& g : gens) set.add(g);
  for (std::size_t d = 0; d <= max_degree; ++d) {
    std::vector<RowBasis> parts{d == 0 ? RowBasis(1) : degree_one_multiples(out.components[d - 1], ctx, d)};
    MatrixQ fresh(0, ctx->graded_dim(d));
    for (const auto& g : set.gens)
      if (g.degree == d) fresh.append_row(to_coords(g.poly, d));
    parts.push_back(RowBasis::span_of(fresh));
    out.components.components.push_back(sum_row_spaces(parts));
  }
  out.gens = std::move(set);
  return out;
}

GeneratorSet minimal_generators(const GradedIdeal& ideal) {
  const auto& ctx = ideal.ctx();
  GeneratorSet out;
  out.truncated = ctx->rule() != SignRule::exterior && ideal.max_degree() >= ctx->cap() &&
                  !ideal.components[ideal.max_degree()].is_zero();
  for (std::size_t d = 1; d <= ideal.max_degree(); ++d) {
    const auto decomposable = degree_one_multiples(ideal.components[d - 1], ctx, d);
    for (const auto& v : pivot_complement(ideal.components[d], decomposable)) out.add(from_coords(ctx, d, v));
  }
  return out;
}

Arrangement random_arrangement(std::size_t n, std::size_t t, std::uint64_t seed) {
  if (n < 2) throw UsageError("random arrangements need n >= 2");
  std::mt19937_64 rng(seed);
  // Plain modular reduction keeps the draws identical across standard libraries.
  auto draw = [&](std::uint64_t lo, std::uint64_t count) { return lo + rng() % count; };
  Arrangement out{n, {}};
  for (std::size_t s = 0; s < t; ++s) {
    const std::size_t dim = draw(1, n - 1);
    std::vector<VectorQ> vectors;
    for (std::size_t k = 0; k < dim; ++k) {
      VectorQ v(n);
      for (auto& e : v) e = static_cast<long>(draw(0, 7)) - 3;
      vectors.push_back(std::move(v));
    }
    out.subspaces.push_back(Subspace::from_span(n, vectors));
  }
  return out;
}

std::vector<BatteryTrial> random_arrangement_battery(std::uint64_t seed, std::size_t trials) {
  std::vector<BatteryTrial> out;
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t n = 3 + i % 3;
    const std::size_t t = 2 + (i / 3) % 3;
    out.push_back({n, t, random_arrangement(n, t, seed * 1000003ULL + i)});
  }
  return out;
}

}  // namespace skewinv
