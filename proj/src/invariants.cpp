#include "skewinv/invariants.hpp"

#include <algorithm>

#include "skewinv/errors.hpp"

namespace skewinv {

std::vector<std::size_t> GradedSubspace::dims() const {
  std::vector<std::size_t> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(c.dim());
  return out;
}

void GeneratorSet::add(SkewPoly poly) {
  const auto d = poly.homogeneous_degree();
  if (!d) throw UsageError("generators must be nonzero and homogeneous");
  beta = std::max(beta, *d);
  gens.push_back(Generator{*d, std::move(poly)});
}

std::vector<std::size_t> GeneratorSet::degrees() const {
  std::vector<std::size_t> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.degree);
  return out;
}

std::size_t top_degree(const AlgebraCtx& ctx) { return ctx.rule() == SignRule::exterior ? ctx.n() : ctx.cap(); }

RowBasis fixed_space(const FiniteMatrixGroup& group, const CtxPtr& ctx, std::size_t d) {
  if (group.dim() != ctx->n()) throw UsageError("group dimension does not match the number of variables");
  const std::size_t dim = ctx->graded_dim(d);
  const auto identity = MatrixQ::identity(dim);
  MatrixQ stacked(0, dim);
  for (const auto& g : group.generators()) {
    const auto shifted = representation_matrix(g, ctx, d) - identity;
    for (std::size_t r = 0; r < dim; ++r) stacked.append_row(shifted.row(r));
  }
  return kernel_basis(stacked);
}

GradedSubspace fixed_spaces(const FiniteMatrixGroup& group, const CtxPtr& ctx, std::size_t max_degree) {
  GradedSubspace out{ctx, {}};
  for (std::size_t d = 0; d <= max_degree; ++d) out.components.push_back(fixed_space(group, ctx, d));
  return out;
}

SkewPoly reynolds(const FiniteMatrixGroup& group, const SkewPoly& f) {
  SkewPoly sum(f.ctx());
  for (const auto& g : group.elements()) sum += act(g, f);
  return sum * Rational(1, group.order());
}

namespace {

// Faddeev-LeVerrier: coefficients c_0..c_n of det(lambda I - A), c_n = 1.
VectorQ characteristic_polynomial(const MatrixQ& a) {
  const std::size_t n = a.rows();
  VectorQ c(n + 1);
  c[n] = 1;
  MatrixQ m(n, n);
  const auto identity = MatrixQ::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    MatrixQ shifted = identity;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) = c[n - k + 1];
    m = a * m + shifted;
    const auto am = a * m;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / k;
  }
  return c;
}

}  // namespace

VectorQ det_one_plus_tA(const MatrixQ& a) {
  if (!a.is_square()) throw UsageError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  const auto c = characteristic_polynomial(a);
  VectorQ e(n + 1);
  for (std::size_t d = 0; d <= n; ++d) e[d] = (d % 2 == 0) ? c[n - d] : Rational(-c[n - d]);
  return e;
}

VectorQ molien_series(const FiniteMatrixGroup& group, const CtxPtr& ctx) {
  if (group.dim() != ctx->n()) throw UsageError("group dimension does not match the number of variables");
  const std::size_t n = ctx->n();
  const std::size_t top = top_degree(*ctx);
  VectorQ series(top + 1);
  switch (ctx->rule()) {
    case SignRule::exterior:
      for (const auto& g : group.elements()) {
        const auto e = det_one_plus_tA(g);
        for (std::size_t d = 0; d <= n; ++d) series[d] += e[d];
      }
      break;
    case SignRule::symmetric:
      for (const auto& g : group.elements()) {
        // det(I - tA) has coefficient c_{n-d} at t^d; invert the power series.
        const auto c = characteristic_polynomial(g);
        VectorQ p(top + 1);
        for (std::size_t d = 0; d <= std::min(n, top); ++d) p[d] = c[n - d];
        VectorQ q(top + 1);
        q[0] = 1;
        for (std::size_t k = 1; k <= top; ++k)
          for (std::size_t i = 1; i <= k; ++i) q[k] -= p[i] * q[k - i];
        for (std::size_t d = 0; d <= top; ++d) series[d] += q[d];
      }
      break;
    case SignRule::skew_minus_one:
      throw UsageError("no Molien-type series for the skew rule");
  }
  for (auto& s : series) s /= group.order();
  return series;
}

namespace {

// Span at degree d of words ending in one of `gens`, given spans of lower degrees.
RowBasis words_ending_in(const GeneratorSet& gens, const CtxPtr& ctx, const std::vector<RowBasis>& lower,
                         std::size_t d) {
  MatrixQ rows(0, ctx->graded_dim(d));
  for (const auto& g : gens.gens) {
    if (g.degree == 0 || g.degree > d) continue;
    const std::size_t e = d - g.degree;
    const auto& prefix = lower[e];
    for (std::size_t i = 0; i < prefix.dim(); ++i) {
      const auto word = mul(from_coords(ctx, e, prefix.rows().row(i)), g.poly);
      rows.append_row(to_coords(word, d));
    }
  }
  return RowBasis::span_of(rows);
}

}  // namespace

std::vector<RowBasis> subalgebra_graded_spans(const GeneratorSet& gens, const CtxPtr& ctx, std::size_t max_degree) {
  std::vector<RowBasis> spans;
  spans.push_back(RowBasis::full(1));
  for (std::size_t d = 1; d <= max_degree; ++d) spans.push_back(words_ending_in(gens, ctx, spans, d));
  return spans;
}

RowBasis subalgebra_graded_span(const GeneratorSet& gens, const CtxPtr& ctx, std::size_t d) {
  return subalgebra_graded_spans(gens, ctx, d).back();
}

GeneratorSet algebra_generators(const FiniteMatrixGroup& group, const CtxPtr& ctx) {
  const std::size_t top = top_degree(*ctx);
  GeneratorSet out;
  out.truncated = ctx->rule() != SignRule::exterior;
  // spans[e] is the full invariant space of degree e once that degree is done.
  std::vector<RowBasis> spans{RowBasis::full(1)};
  for (std::size_t d = 1; d <= top; ++d) {
    auto invariants = fixed_space(group, ctx, d);
    const auto generated = words_ending_in(out, ctx, spans, d);
    for (const auto& v : pivot_complement(invariants, generated)) out.add(from_coords(ctx, d, v));
    spans.push_back(std::move(invariants));
  }
  return out;
}

GeneratorSet minimize_generators(GeneratorSet gens, const CtxPtr& ctx) {
  std::stable_sort(gens.gens.begin(), gens.gens.end(),
                   [](const Generator& a, const Generator& b) { return a.degree < b.degree; });
  for (std::size_t i = gens.gens.size(); i-- > 0;) {
    GeneratorSet others;
    for (std::size_t j = 0; j < gens.gens.size(); ++j)
      if (j != i) others.gens.push_back(gens.gens[j]);
    const auto& candidate = gens.gens[i];
    if (subalgebra_graded_span(others, ctx, candidate.degree).contains(to_coords(candidate.poly, candidate.degree)))
      gens.gens.erase(gens.gens.begin() + static_cast<std::ptrdiff_t>(i));
  }
  GeneratorSet out;
  out.truncated = gens.truncated;
  for (auto& g : gens.gens) out.add(std::move(g.poly));
  return out;
}

}  // namespace skewinv
