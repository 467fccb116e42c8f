#include "skewinv/group.hpp"

#include <deque>
#include <unordered_set>

#include "skewinv/errors.hpp"

namespace skewinv {

FiniteMatrixGroup FiniteMatrixGroup::trivial(std::size_t n) {
  return enumerate_group({MatrixQ::identity(n)}, 1);
}

bool FiniteMatrixGroup::is_signed_permutation() const {
  for (const auto& g : elements_) {
    for (std::size_t r = 0; r < dim_; ++r) {
      std::size_t nonzero = 0;
      for (std::size_t c = 0; c < dim_; ++c) {
        const auto& q = g(r, c);
        if (sgn(q) == 0) continue;
        if (abs(q) != 1) return false;
        ++nonzero;
      }
      if (nonzero != 1) return false;
    }
    for (std::size_t c = 0; c < dim_; ++c) {
      std::size_t nonzero = 0;
      for (std::size_t r = 0; r < dim_; ++r) nonzero += sgn(g(r, c)) != 0 ? 1 : 0;
      if (nonzero != 1) return false;
    }
  }
  return true;
}

FiniteMatrixGroup enumerate_group(std::vector<MatrixQ> generators, std::size_t cap) {
  if (generators.empty()) throw UsageError("a group needs at least one generator");
  const std::size_t n = generators.front().rows();
  for (const auto& g : generators) {
    if (!g.is_square() || g.rows() != n) throw UsageError("generators must be square matrices of equal size");
    if (rref(g).rank != n) throw UsageError("generator is not invertible");
  }

  FiniteMatrixGroup group;
  group.dim_ = n;
  group.generators_ = generators;
  std::unordered_set<std::string> seen;
  std::deque<std::size_t> frontier;
  auto admit = [&](MatrixQ m) {
    if (!seen.insert(m.key()).second) return;
    if (group.elements_.size() == cap)
      throw CapExceeded("group closure exceeds " + std::to_string(cap) + " elements");
    group.elements_.push_back(std::move(m));
    frontier.push_back(group.elements_.size() - 1);
  };
  admit(MatrixQ::identity(n));
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) admit(group.elements_[i] * g);
  }
  return group;
}

FiniteMatrixGroup from_elements(std::vector<MatrixQ> generators, std::vector<MatrixQ> elements) {
  if (elements.empty()) throw UsageError("a group has at least the identity");
  FiniteMatrixGroup group;
  group.dim_ = elements.front().rows();
  group.generators_ = std::move(generators);
  group.elements_ = std::move(elements);
  return group;
}

std::vector<LinearForm> variable_images(const MatrixQ& g) {
  std::vector<LinearForm> images;
  images.reserve(g.rows());
  for (std::size_t j = 0; j < g.rows(); ++j) images.push_back(LinearForm{g.row_vector(j)});
  return images;
}

SkewPoly act(const MatrixQ& g, const SkewPoly& f) {
  if (!g.is_square() || g.rows() != f.ctx()->n())
    throw UsageError("group element dimension does not match the number of variables");
  return substitute(f, f.ctx(), variable_images(g));
}

MatrixQ representation_matrix(const MatrixQ& g, const CtxPtr& ctx, std::size_t d) {
  const auto& basis = ctx->basis(d);
  const std::size_t dim = basis.monomials.size();
  MatrixQ rho(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const auto image = act(g, SkewPoly::monomial(ctx, basis.monomials[j]));
    const auto col = to_coords(image, d);
    for (std::size_t i = 0; i < dim; ++i) rho(i, j) = col[i];
  }
  return rho;
}

}  // namespace skewinv
