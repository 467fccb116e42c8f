#pragma once

// Exact dense linear algebra over Q.  Subspaces are always kept in reduced
// row-echelon form so that equality of subspaces is equality of bases.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace skewinv {

using Rational = mpq_class;
using VectorQ = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" (optional surrounding whitespace) into a canonical rational.
Rational parse_rational(std::string_view text);

/// Canonical rendering: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(std::size_t rows, std::size_t cols);

  static MatrixQ identity(std::size_t n);
  /// All rows must have length `cols`.
  static MatrixQ from_rows(std::size_t cols, const std::vector<VectorQ>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  VectorQ row_vector(std::size_t r) const;

  void append_row(std::span<const Rational> values);
  void swap_rows(std::size_t a, std::size_t b);
  /// Keeps the first `n` rows.
  void truncate_rows(std::size_t n);

  MatrixQ transposed() const;
  MatrixQ operator*(const MatrixQ& rhs) const;
  MatrixQ operator+(const MatrixQ& rhs) const;
  MatrixQ operator-(const MatrixQ& rhs) const;
  VectorQ apply(std::span<const Rational> v) const;

  bool is_zero() const;
  /// Row-major serialization of the entries, used as an exact hash key.
  std::string key() const;

  friend bool operator==(const MatrixQ& a, const MatrixQ& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct Echelon {
  MatrixQ reduced;  // zero rows removed
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Gauss-Jordan elimination with first-nonzero pivoting.
Echelon rref(MatrixQ m);

/// A subspace of Q^n stored as its reduced row-echelon basis.
class RowBasis {
 public:
  RowBasis() = default;
  /// The zero subspace of Q^ambient_dim.
  explicit RowBasis(std::size_t ambient_dim);

  static RowBasis span_of(const MatrixQ& rows);
  static RowBasis span_of(std::size_t ambient_dim, const std::vector<VectorQ>& rows);
  static RowBasis full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return rows_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const MatrixQ& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  VectorQ row(std::size_t i) const { return rows_.row_vector(i); }

  /// Remainder of `v` after eliminating every pivot column of this basis.
  VectorQ reduce(std::span<const Rational> v) const;
  bool contains(std::span<const Rational> v) const;
  bool contains(const RowBasis& other) const;

  friend bool operator==(const RowBasis& a, const RowBasis& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  MatrixQ rows_;
  std::vector<std::size_t> pivots_;
};

/// Basis of {v : M v = 0}.
RowBasis kernel_basis(const MatrixQ& m);

/// Throws UsageError on an empty list or mismatched ambient dimensions.
RowBasis intersect_row_spaces(std::span<const RowBasis> spaces);
RowBasis sum_row_spaces(std::span<const RowBasis> spaces);
bool in_row_space(std::span<const Rational> v, const RowBasis& basis);

/// Vectors of `space` extending `sub` to a basis of sub + space.  Candidates
/// are the echelon rows of `space`, taken in pivot order and kept whenever
/// they are independent of everything kept so far.
std::vector<VectorQ> pivot_complement(const RowBasis& space, const RowBasis& sub);

}  // namespace skewinv
