#pragma once

#include <cstddef>
#include <vector>

#include "skewinv/algebra.hpp"
#include "skewinv/group.hpp"
#include "skewinv/linalg.hpp"

namespace skewinv {

/// Subspaces of the graded pieces 0..max_degree(), each in coordinates of
/// graded_basis(ctx, d).
struct GradedSubspace {
  CtxPtr ctx;
  std::vector<RowBasis> components;

  std::size_t max_degree() const { return components.empty() ? 0 : components.size() - 1; }
  const RowBasis& operator[](std::size_t d) const { return components.at(d); }
  std::vector<std::size_t> dims() const;
  friend bool operator==(const GradedSubspace& a, const GradedSubspace& b) {
    return a.components == b.components;
  }
};

struct Generator {
  std::size_t degree = 0;
  SkewPoly poly;
};

struct GeneratorSet {
  std::vector<Generator> gens;
  /// Largest generator degree, 0 when there are no generators.
  std::size_t beta = 0;
  /// Set when the algebra is only known up to a degree cap.
  bool truncated = false;

  void add(SkewPoly poly);  // poly must be nonzero and homogeneous
  std::vector<std::size_t> degrees() const;
};

/// Highest degree that carries information: n for the exterior rule, the cap otherwise.
std::size_t top_degree(const AlgebraCtx& ctx);

/// Invariants of degree d, as the common kernel of rho(g) - I over the group generators.
RowBasis fixed_space(const FiniteMatrixGroup& group, const CtxPtr& ctx, std::size_t d);
GradedSubspace fixed_spaces(const FiniteMatrixGroup& group, const CtxPtr& ctx, std::size_t max_degree);

/// (1/|G|) sum_g act(g, f).
SkewPoly reynolds(const FiniteMatrixGroup& group, const SkewPoly& f);

/// Coefficients 0..top_degree of the Molien-type series: (1/|G|) sum det(I + tA)
/// for the exterior rule, (1/|G|) sum 1/det(I - tA) truncated at the cap for the
/// symmetric rule.  Throws UsageError for the skew rule.
VectorQ molien_series(const FiniteMatrixGroup& group, const CtxPtr& ctx);

/// Coefficients c_0..c_n of det(I + tA), exact.
VectorQ det_one_plus_tA(const MatrixQ& a);

/// Span of all words in the generators with total degree d.
RowBasis subalgebra_graded_span(const GeneratorSet& gens, const CtxPtr& ctx, std::size_t d);
/// The same for every degree 0..max_degree at once.
std::vector<RowBasis> subalgebra_graded_spans(const GeneratorSet& gens, const CtxPtr& ctx, std::size_t max_degree);

/// Minimal homogeneous generators of the invariant ring, degree by degree up to top_degree(ctx).
GeneratorSet algebra_generators(const FiniteMatrixGroup& group, const CtxPtr& ctx);

/// Drops, in turn, each generator lying in the subalgebra span of the remaining ones.
GeneratorSet minimize_generators(GeneratorSet gens, const CtxPtr& ctx);

}  // namespace skewinv
