#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "skewinv/algebra.hpp"
#include "skewinv/group.hpp"
#include "skewinv/invariants.hpp"
#include "skewinv/linalg.hpp"

namespace skewinv {

/// One subspace W of Q^m, kept both as a span and as the forms vanishing on it.
struct Subspace {
  RowBasis span;
  RowBasis forms;
  /// Forms exactly as supplied (e.g. the rows of S_g); may be redundant.
  MatrixQ equations;

  static Subspace from_span(std::size_t ambient_dim, const std::vector<VectorQ>& vectors);
  static Subspace from_forms(std::size_t ambient_dim, const std::vector<VectorQ>& forms);
};

struct Arrangement {
  std::size_t ambient_dim = 0;
  std::vector<Subspace> subspaces;
};

/// Ideal generated by linear forms, each row one form.
struct LinearIdeal {
  RowBasis forms;
};

/// Homogeneous ideal tracked in degrees 0..max_degree().
struct GradedIdeal {
  GradedSubspace components;
  std::optional<GeneratorSet> gens;

  const CtxPtr& ctx() const { return components.ctx; }
  std::size_t max_degree() const { return components.max_degree(); }
};

/// Forms c with c·v = 0 for every v in `spanning`.
RowBasis vanishing_forms(std::size_t ambient_dim, const std::vector<VectorQ>& spanning);

/// The graphs {(v, g v)} inside Q^{2n}, one per group element, cut out by
/// y_i - sum_j A(g)_{ij} x_j in variable order x_1..x_n, y_1..y_n.
Arrangement group_arrangement(const FiniteMatrixGroup& group);

/// Degree-d piece of the ideal generated by J: span of m ∧ s over forms s and
/// degree-(d-1) monomials m.  Requires d >= 1.
RowBasis linear_ideal_component(const LinearIdeal& ideal, const CtxPtr& ctx, std::size_t d);

/// Components 1..max_degree of the intersection of the linear ideals of the
/// arrangement's subspaces; component 0 is zero.
GradedIdeal intersection_ideal(const Arrangement& arrangement, const CtxPtr& ctx, std::size_t max_degree);

/// Ideal generated by homogeneous elements, tracked up to max_degree.
GradedIdeal ideal_from_generators(const std::vector<SkewPoly>& gens, const CtxPtr& ctx, std::size_t max_degree);

/// span{x_i ∧ b : b in basis} inside degree d, where basis lives in degree d - 1.
RowBasis degree_one_multiples(const RowBasis& basis, const CtxPtr& ctx, std::size_t d);

/// Minimal homogeneous generators: in each degree, a pivot complement of
/// E_1 · I_{d-1} inside I_d.
GeneratorSet minimal_generators(const GradedIdeal& ideal);

/// Reproducible random arrangement: `t` subspaces of Q^n with dimensions in
/// [1, n-1] spanned by vectors with entries in [-3, 3].
Arrangement random_arrangement(std::size_t n, std::size_t t, std::uint64_t seed);

struct BatteryTrial {
  std::size_t n = 0;
  std::size_t t = 0;
  Arrangement arrangement;
};

/// Trial i uses n = 3 + i % 3 and t = 2 + (i / 3) % 3, seeded from `seed` and i.
std::vector<BatteryTrial> random_arrangement_battery(std::uint64_t seed, std::size_t trials);

}  // namespace skewinv
