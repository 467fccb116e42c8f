#pragma once

#include <cstddef>
#include <vector>

#include "skewinv/algebra.hpp"
#include "skewinv/linalg.hpp"

namespace skewinv {

inline constexpr std::size_t kDefaultGroupCap = 10000;

/// A finite group of invertible rational n×n matrices, listed element by element.
/// Element 0 is the identity; the remaining elements appear in breadth-first
/// discovery order from the generators.
class FiniteMatrixGroup {
 public:
  static FiniteMatrixGroup trivial(std::size_t n);

  std::size_t dim() const { return dim_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<MatrixQ>& elements() const { return elements_; }
  const std::vector<MatrixQ>& generators() const { return generators_; }
  std::size_t identity_index() const { return 0; }

  /// True when every element has exactly one nonzero entry ±1 per row and column.
  bool is_signed_permutation() const;

 private:
  friend FiniteMatrixGroup enumerate_group(std::vector<MatrixQ> generators, std::size_t cap);
  friend FiniteMatrixGroup from_elements(std::vector<MatrixQ> generators, std::vector<MatrixQ> elements);

  std::size_t dim_ = 0;
  std::vector<MatrixQ> generators_;
  std::vector<MatrixQ> elements_;
};

/// Closure of `generators` under multiplication.  Throws UsageError for an
/// empty list, non-square, mismatched or singular generators, and CapExceeded
/// once more than `cap` elements have been found.
FiniteMatrixGroup enumerate_group(std::vector<MatrixQ> generators, std::size_t cap = kDefaultGroupCap);

/// Wraps an already closed element list (identity first).  No closure check.
FiniteMatrixGroup from_elements(std::vector<MatrixQ> generators, std::vector<MatrixQ> elements);

/// g·f = f(A(g) x): substitutes x_j -> sum_k A(g)_{jk} x_k.  This is a right
/// action, act(g, act(h, f)) = act(h*g, f).
SkewPoly act(const MatrixQ& g, const SkewPoly& f);

/// Matrix of act(g, ·) on the degree-d piece: column j holds the coordinates
/// of act(g, basis_j).  Hence rho(g*h) = rho(h) * rho(g).
MatrixQ representation_matrix(const MatrixQ& g, const CtxPtr& ctx, std::size_t d);

/// Images of the variables under g, one linear form per row of A(g).
std::vector<LinearForm> variable_images(const MatrixQ& g);

}  // namespace skewinv
