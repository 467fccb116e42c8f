#pragma once

// Graded algebras generated by n variables under one of three sign rules:
//   exterior         x_i x_j = -x_j x_i, x_i^2 = 0          (top degree n)
//   skew_minus_one   x_i x_j = -x_j x_i for i != j          (infinite, capped)
//   symmetric        commutative polynomials                (infinite, capped)

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skewinv/linalg.hpp"

namespace skewinv {

enum class SignRule { exterior, skew_minus_one, symmetric };

std::string_view to_string(SignRule rule);
/// Accepts "exterior", "skew", "skew_minus_one", "symmetric".
SignRule parse_sign_rule(std::string_view text);

/// Exponent vector.  Ordering is the graded-basis order: by degree, then by
/// the sorted index word ascending (x1x1 < x1x2 < x2x2), which is descending
/// lexicographic order on exponent vectors.
struct Monomial {
  std::vector<std::uint16_t> exponents;

  std::size_t degree() const;
  bool is_squarefree() const;
  /// Variable indices in ascending order, repeated by multiplicity.
  std::vector<std::size_t> word() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b);
};

class AlgebraCtx;
using CtxPtr = std::shared_ptr<const AlgebraCtx>;

struct GradedBasis {
  std::vector<Monomial> monomials;
  std::map<Monomial, std::size_t> index;
};

class AlgebraCtx {
 public:
  /// `cap` is ignored for the exterior rule (forced to n) and required otherwise.
  static CtxPtr make(std::size_t n, SignRule rule, std::optional<std::size_t> cap = std::nullopt,
                     std::vector<std::string> names = {});

  std::size_t n() const { return n_; }
  SignRule rule() const { return rule_; }
  std::size_t cap() const { return cap_; }
  const std::vector<std::string>& names() const { return names_; }

  /// Basis of the degree-d piece, cached.  Throws UsageError for d > cap.
  const GradedBasis& basis(std::size_t d) const;
  std::size_t graded_dim(std::size_t d) const { return basis(d).monomials.size(); }

  /// Same rule, cap and names; used to test whether two polynomials can be combined.
  bool same_as(const AlgebraCtx& other) const;

  AlgebraCtx(std::size_t n, SignRule rule, std::size_t cap, std::vector<std::string> names);

 private:
  std::size_t n_;
  SignRule rule_;
  std::size_t cap_;
  std::vector<std::string> names_;
  mutable std::mutex cache_mutex_;
  mutable std::vector<std::unique_ptr<GradedBasis>> cache_;
};

/// Deterministic ordered basis of the degree-d piece.  Throws UsageError for d > cap.
std::vector<Monomial> graded_basis(const AlgebraCtx& ctx, std::size_t d);

/// Product of two monomials with its sign; nullopt when it vanishes or
/// exceeds the cap.
struct SignedMonomial {
  Monomial monomial;
  int sign;
};
std::optional<SignedMonomial> multiply_monomials(const AlgebraCtx& ctx, const Monomial& a, const Monomial& b);

struct LinearForm {
  VectorQ coefficients;
};

class SkewPoly {
 public:
  explicit SkewPoly(CtxPtr ctx);

  static SkewPoly constant(CtxPtr ctx, const Rational& c);
  static SkewPoly variable(CtxPtr ctx, std::size_t i);
  static SkewPoly monomial(CtxPtr ctx, Monomial m, const Rational& c = 1);
  static SkewPoly linear(CtxPtr ctx, const LinearForm& form);

  const CtxPtr& ctx() const { return ctx_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Degree shared by every term; nullopt for zero or mixed-degree input.
  std::optional<std::size_t> homogeneous_degree() const;
  std::size_t max_degree() const;
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);
  /// Degree-d homogeneous component.
  SkewPoly component(std::size_t d) const;

  SkewPoly& operator+=(const SkewPoly& rhs);
  SkewPoly& operator-=(const SkewPoly& rhs);
  SkewPoly& operator*=(const Rational& c);
  SkewPoly operator-() const;

  friend SkewPoly operator+(SkewPoly a, const SkewPoly& b) { return a += b; }
  friend SkewPoly operator-(SkewPoly a, const SkewPoly& b) { return a -= b; }
  friend SkewPoly operator*(SkewPoly a, const Rational& c) { return a *= c; }
  friend SkewPoly operator*(const Rational& c, SkewPoly a) { return a *= c; }
  friend bool operator==(const SkewPoly& a, const SkewPoly& b);

 private:
  void require_same_ctx(const SkewPoly& other) const;

  CtxPtr ctx_;
  std::map<Monomial, Rational> terms_;
};

/// Product in the algebra; terms above the cap are dropped.
SkewPoly mul(const SkewPoly& f, const SkewPoly& g);
inline SkewPoly operator*(const SkewPoly& f, const SkewPoly& g) { return mul(f, g); }

/// Algebra homomorphism sending source variable i to `images[i]` in `target`.
/// Under the skew_minus_one rule every image must be zero or a scalar
/// multiple of a single variable, with distinct variables for nonzero images.
SkewPoly substitute(const SkewPoly& f, const CtxPtr& target, std::span<const LinearForm> images);

/// Coordinates in `graded_basis(ctx, d)` order.  Throws UsageError unless f is
/// zero or homogeneous of degree d.
VectorQ to_coords(const SkewPoly& f, std::size_t d);
SkewPoly from_coords(const CtxPtr& ctx, std::size_t d, std::span<const Rational> v);

/// "3/2 x1∧x2 - y1" for the exterior rule, "x^2 y + y^3" otherwise; "0" for zero.
std::string render(const SkewPoly& f);
/// Inverse of render.  Factors are multiplied in the order written, so
/// "y x" under the skew rule parses to -x y.
SkewPoly parse_skew_poly(const CtxPtr& ctx, std::string_view text);

}  // namespace skewinv
