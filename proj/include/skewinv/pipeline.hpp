#pragma once

// End-to-end invariant computations: the Hilbert ideal computed directly and
// through the group arrangement, invariant generators from the arrangement,
// degree-bound certification, and the symmetric/exterior bound comparison.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "skewinv/algebra.hpp"
#include "skewinv/arrangement.hpp"
#include "skewinv/group.hpp"
#include "skewinv/invariants.hpp"

namespace skewinv {

enum class Method { direct, arrangement };
std::string_view to_string(Method method);
Method parse_method(std::string_view text);

struct NoetherReport {
  Method method = Method::direct;
  std::size_t group_order = 0;
  GeneratorSet generators;
  std::size_t beta = 0;
  std::size_t bound = 0;
  /// beta <= bound.
  bool pass = false;
  /// Only the exterior rule carries the guarantee; other rules just report.
  bool asserted = false;
  std::vector<std::size_t> invariant_dims;
};

struct GansubReport {
  std::vector<std::size_t> lhs_dims;
  std::vector<std::size_t> rhs_dims;
  std::vector<bool> equal;

  bool all_equal() const;
};

struct SquarefreeEntry {
  std::size_t degree = 0;
  SkewPoly generator;
  bool is_squarefree = false;
};

struct SquarefreeProbe {
  /// Minimal generators of degree above |G|.
  std::vector<SquarefreeEntry> entries;
  /// Degrees above |G| (up to the cap) holding a nonzero square-free invariant.
  std::vector<std::size_t> squarefree_invariant_degrees;
};

struct TransferRow {
  std::size_t v_dim = 0;
  std::size_t beta_sym = 0;
  std::size_t beta_ext = 0;
};

struct TransferTable {
  std::size_t group_order = 0;
  std::vector<TransferRow> rows;
  std::size_t max_beta_sym = 0;
  std::size_t max_beta_ext = 0;
  /// max beta_ext <= max beta_sym.
  bool holds = false;
};

/// ⋀(x_1..x_n, y_1..y_n) for an exterior context on x_1..x_n.
CtxPtr doubled_context(const CtxPtr& ctx);

/// The Hilbert ideal E·E_+^G in degrees 0..max_degree, built as
/// E_1 · J_{d-1} + E_d^G.
GradedSubspace hilbert_ideal_direct(const FiniteMatrixGroup& group, const CtxPtr& ctx, std::size_t max_degree);

/// I'(A_G) inside doubled_context(ctx), every degree through 2n.
GradedIdeal group_intersection_ideal(const FiniteMatrixGroup& group, const CtxPtr& ctx);

/// Sets y_i = 0 in generators living in doubled_context(target); zero images are dropped.
GeneratorSet eliminate_y(const GeneratorSet& gens, const CtxPtr& target);

/// Compares ((I'(A_G) + (y)) ∩ ⋀(x))_d with the Hilbert ideal for d = 0..2n.
GansubReport check_gansub(const FiniteMatrixGroup& group, const CtxPtr& ctx);

/// Invariant generators from minimal generators of I'(A_G): set y = 0, apply
/// the Reynolds operator, drop zeros, then drop redundant generators.
GeneratorSet invariant_generators_via_arrangement(const FiniteMatrixGroup& group, const CtxPtr& ctx);

NoetherReport noether_check(const FiniteMatrixGroup& group, const CtxPtr& ctx, Method method);

/// Requires the skew rule and a signed-permutation group.
SquarefreeProbe squarefree_probe(const FiniteMatrixGroup& group, const CtxPtr& ctx);

/// The group acting on W ⊗ K^v_dim with trivial action on the second factor.
/// Coordinates are ordered w-major, v-minor, so A(g) becomes A(g) ⊗ I.
FiniteMatrixGroup tensor_with_trivial(const FiniteMatrixGroup& group, std::size_t v_dim);

/// beta over the symmetric rule (capped at |G|) and over the exterior rule for
/// each dimension of the trivial factor.
TransferTable bound_transference_experiment(const FiniteMatrixGroup& group, std::span<const std::size_t> v_dims);

}  // namespace skewinv
