#include "skewinv/pipeline.hpp"

#include <algorithm>

#include "skewinv/errors.hpp"

namespace skewinv {

std::string_view to_string(Method method) { return method == Method::direct ? "direct" : "arrangement"; }

Method parse_method(std::string_view text) {
  if (text == "direct") return Method::direct;
  if (text == "arrangement") return Method::arrangement;
  throw ParseError("unknown method '" + std::string(text) + "'");
}

bool GansubReport::all_equal() const {
  return std::all_of(equal.begin(), equal.end(), [](bool b) { return b; });
}

namespace {

void require_exterior(const AlgebraCtx& ctx, const char* what) {
  if (ctx.rule() != SignRule::exterior) throw UsageError(std::string(what) + " needs the exterior rule");
}

bool has_default_names(const AlgebraCtx& ctx) {
  for (std::size_t i = 0; i < ctx.n(); ++i)
    if (ctx.names()[i] != "x" + std::to_string(i + 1)) return false;
  return true;
}

// x-only monomials of the doubled algebra, as a subspace of its degree-d piece.
RowBasis x_part(const CtxPtr& doubled, std::size_t n, std::size_t d) {
  const auto& basis = doubled->basis(d);
  MatrixQ rows(0, basis.monomials.size());
  VectorQ e(basis.monomials.size());
  for (std::size_t i = 0; i < basis.monomials.size(); ++i) {
    const auto& ex = basis.monomials[i].exponents;
    if (std::any_of(ex.begin() + static_cast<std::ptrdiff_t>(n), ex.end(), [](auto k) { return k != 0; })) continue;
    std::fill(e.begin(), e.end(), Rational(0));
    e[i] = 1;
    rows.append_row(e);
  }
  return RowBasis::span_of(rows);
}

std::vector<LinearForm> y_to_zero_images(std::size_t n) {
  std::vector<LinearForm> images(2 * n, LinearForm{VectorQ(n)});
  for (std::size_t i = 0; i < n; ++i) images[i].coefficients[i] = 1;
  return images;
}

}  // namespace

CtxPtr doubled_context(const CtxPtr& ctx) {
  require_exterior(*ctx, "the group arrangement");
  const std::size_t n = ctx->n();
  std::vector<std::string> names = ctx->names();
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(has_default_names(*ctx) ? "y" + std::to_string(i + 1) : ctx->names()[i] + "'");
  return AlgebraCtx::make(2 * n, SignRule::exterior, std::nullopt, std::move(names));
}

GradedSubspace hilbert_ideal_direct(const FiniteMatrixGroup& group, const CtxPtr& ctx, std::size_t max_degree) {
  GradedSubspace out{ctx, {RowBasis(1)}};
  for (std::size_t d = 1; d <= max_degree; ++d) {
    const std::vector<RowBasis> parts{degree_one_multiples(out.components[d - 1], ctx, d),
                                      fixed_space(group, ctx, d)};
    out.components.push_back(sum_row_spaces(parts));
  }
  return out;
}

GradedIdeal group_intersection_ideal(const FiniteMatrixGroup& group, const CtxPtr& ctx) {
  const auto doubled = doubled_context(ctx);
  return intersection_ideal(group_arrangement(group), doubled, doubled->n());
}

GeneratorSet eliminate_y(const GeneratorSet& gens, const CtxPtr& target) {
  const auto images = y_to_zero_images(target->n());
  GeneratorSet out;
  out.truncated = gens.truncated;
  for (const auto& g : gens.gens) {
    if (g.poly.ctx()->n() != 2 * target->n()) throw UsageError("generator does not live in the doubled algebra");
    auto image = substitute(g.poly, target, images);
    if (!image.is_zero()) out.add(std::move(image));
  }
  return out;
}

GansubReport check_gansub(const FiniteMatrixGroup& group, const CtxPtr& ctx) {
  require_exterior(*ctx, "check_gansub");
  const std::size_t n = ctx->n();
  const auto ideal = group_intersection_ideal(group, ctx);
  const auto& doubled = ideal.ctx();
  const auto hilbert = hilbert_ideal_direct(group, ctx, n);

  VectorQ y_form(2 * n);
  std::vector<VectorQ> y_forms;
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(y_form.begin(), y_form.end(), Rational(0));
    y_form[n + i] = 1;
    y_forms.push_back(y_form);
  }
  const LinearIdeal y_ideal{RowBasis::span_of(2 * n, y_forms)};
  const auto images = y_to_zero_images(n);

  GansubReport report;
  for (std::size_t d = 0; d <= 2 * n; ++d) {
    const RowBasis y_part = d == 0 ? RowBasis(1) : linear_ideal_component(y_ideal, doubled, d);
    const std::vector<RowBasis> summands{ideal.components[d], y_part};
    const std::vector<RowBasis> cut{sum_row_spaces(summands), x_part(doubled, n, d)};
    const auto embedded = intersect_row_spaces(cut);

    MatrixQ rows(0, ctx->graded_dim(d));
    for (std::size_t i = 0; i < embedded.dim(); ++i) {
      const auto f = substitute(from_coords(doubled, d, embedded.rows().row(i)), ctx, images);
      rows.append_row(to_coords(f, d));
    }
    const auto lhs = RowBasis::span_of(rows);
    const RowBasis rhs = d <= n ? hilbert.components[d] : RowBasis(ctx->graded_dim(d));
    report.lhs_dims.push_back(lhs.dim());
    report.rhs_dims.push_back(rhs.dim());
    report.equal.push_back(lhs == rhs);
  }
  return report;
}

GeneratorSet invariant_generators_via_arrangement(const FiniteMatrixGroup& group, const CtxPtr& ctx) {
  require_exterior(*ctx, "the arrangement method");
  const auto ideal_gens = minimal_generators(group_intersection_ideal(group, ctx));
  const auto hilbert_gens = eliminate_y(ideal_gens, ctx);
  GeneratorSet invariant;
  for (const auto& g : hilbert_gens.gens) {
    auto r = reynolds(group, g.poly);
    if (!r.is_zero()) invariant.add(std::move(r));
  }
  return minimize_generators(std::move(invariant), ctx);
}

NoetherReport noether_check(const FiniteMatrixGroup& group, const CtxPtr& ctx, Method method) {
  NoetherReport report;
  report.method = method;
  report.group_order = group.order();
  report.bound = group.order();
  report.generators = method == Method::direct ? algebra_generators(group, ctx)
                                               : invariant_generators_via_arrangement(group, ctx);
  report.beta = report.generators.beta;
  report.pass = report.beta <= report.bound;
  report.asserted = ctx->rule() == SignRule::exterior;
  report.invariant_dims = fixed_spaces(group, ctx, top_degree(*ctx)).dims();
  return report;
}

SquarefreeProbe squarefree_probe(const FiniteMatrixGroup& group, const CtxPtr& ctx) {
  if (ctx->rule() != SignRule::skew_minus_one) throw UsageError("the square-free probe needs the skew rule");
  if (!group.is_signed_permutation())
    throw UsageError("the ideal of squares is only known to be stable under signed permutations");
  const std::size_t bound = group.order();
  SquarefreeProbe probe;
  for (const auto& g : algebra_generators(group, ctx).gens) {
    if (g.degree <= bound) continue;
    const bool squarefree = std::all_of(g.poly.terms().begin(), g.poly.terms().end(),
                                        [](const auto& term) { return term.first.is_squarefree(); });
    probe.entries.push_back({g.degree, g.poly, squarefree});
  }
  for (std::size_t d = bound + 1; d <= ctx->cap(); ++d) {
    const auto& basis = ctx->basis(d);
    MatrixQ squarefree(0, basis.monomials.size());
    VectorQ e(basis.monomials.size());
    for (std::size_t i = 0; i < basis.monomials.size(); ++i) {
      if (!basis.monomials[i].is_squarefree()) continue;
      std::fill(e.begin(), e.end(), Rational(0));
      e[i] = 1;
      squarefree.append_row(e);
    }
    const std::vector<RowBasis> cut{fixed_space(group, ctx, d), RowBasis::span_of(squarefree)};
    if (!intersect_row_spaces(cut).is_zero()) probe.squarefree_invariant_degrees.push_back(d);
  }
  return probe;
}

FiniteMatrixGroup tensor_with_trivial(const FiniteMatrixGroup& group, std::size_t v_dim) {
  if (v_dim == 0) throw UsageError("the trivial factor needs positive dimension");
  const std::size_t w = group.dim();
  auto lift = [&](const MatrixQ& a) {
    MatrixQ out(w * v_dim, w * v_dim);
    for (std::size_t i = 0; i < w; ++i)
      for (std::size_t j = 0; j < w; ++j)
        for (std::size_t k = 0; k < v_dim; ++k) out(i * v_dim + k, j * v_dim + k) = a(i, j);
    return out;
  };
  std::vector<MatrixQ> gens;
  std::vector<MatrixQ> elements;
  for (const auto& g : group.generators()) gens.push_back(lift(g));
  for (const auto& g : group.elements()) elements.push_back(lift(g));
  return from_elements(std::move(gens), std::move(elements));
}

TransferTable bound_transference_experiment(const FiniteMatrixGroup& group, std::span<const std::size_t> v_dims) {
  TransferTable table;
  table.group_order = group.order();
  for (const auto v : v_dims) {
    const auto lifted = tensor_with_trivial(group, v);
    const std::size_t m = lifted.dim();
    const auto sym = AlgebraCtx::make(m, SignRule::symmetric, group.order());
    const auto ext = AlgebraCtx::make(m, SignRule::exterior);
    TransferRow row{v, algebra_generators(lifted, sym).beta, algebra_generators(lifted, ext).beta};
    table.max_beta_sym = std::max(table.max_beta_sym, row.beta_sym);
    table.max_beta_ext = std::max(table.max_beta_ext, row.beta_ext);
    table.rows.push_back(row);
  }
  table.holds = table.max_beta_ext <= table.max_beta_sym;
  return table;
}

}  // namespace skewinv
