#include "skewinv/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "skewinv/errors.hpp"

namespace skewinv {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
  if (!is_integer_token(num) || (slash != std::string_view::npos && (!is_integer_token(den) || den[0] == '-' || den[0] == '+'))) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  // mpz does not accept a leading '+'.
  auto strip_plus = [](std::string_view t) { return std::string(t[0] == '+' ? t.substr(1) : t); };
  mpz_class n(strip_plus(num), 10);
  mpz_class d(1);
  if (slash != std::string_view::npos) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

MatrixQ::MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

MatrixQ MatrixQ::identity(std::size_t n) {
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatrixQ MatrixQ::from_rows(std::size_t cols, const std::vector<VectorQ>& rows) {
  MatrixQ m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

VectorQ MatrixQ::row_vector(std::size_t r) const {
  const auto s = row(r);
  return {s.begin(), s.end()};
}

void MatrixQ::append_row(std::span<const Rational> values) {
  if (values.size() != cols_) throw UsageError("row length does not match matrix width");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void MatrixQ::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
}

void MatrixQ::truncate_rows(std::size_t n) {
  if (n >= rows_) return;
  rows_ = n;
  data_.resize(rows_ * cols_);
}

MatrixQ MatrixQ::transposed() const {
  MatrixQ t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

MatrixQ MatrixQ::operator*(const MatrixQ& rhs) const {
  if (cols_ != rhs.rows_) throw UsageError("matrix product shape mismatch");
  MatrixQ out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

MatrixQ MatrixQ::operator+(const MatrixQ& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw UsageError("matrix sum shape mismatch");
  MatrixQ out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

MatrixQ MatrixQ::operator-(const MatrixQ& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw UsageError("matrix difference shape mismatch");
  MatrixQ out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

VectorQ MatrixQ::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw UsageError("matrix-vector shape mismatch");
  VectorQ out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool MatrixQ::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

std::string MatrixQ::key() const {
  std::ostringstream os;
  os << rows_ << 'x' << cols_;
  for (const auto& q : data_) os << ' ' << q.get_str();
  return os.str();
}

Echelon rref(MatrixQ m) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.truncate_rows(r);
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

RowBasis::RowBasis(std::size_t ambient_dim) : ambient_dim_(ambient_dim), rows_(0, ambient_dim) {}

RowBasis RowBasis::span_of(const MatrixQ& rows) {
  RowBasis b(rows.cols());
  auto e = rref(rows);
  b.rows_ = std::move(e.reduced);
  b.pivots_ = std::move(e.pivots);
  return b;
}

RowBasis RowBasis::span_of(std::size_t ambient_dim, const std::vector<VectorQ>& rows) {
  return span_of(MatrixQ::from_rows(ambient_dim, rows));
}

RowBasis RowBasis::full(std::size_t ambient_dim) { return span_of(MatrixQ::identity(ambient_dim)); }

VectorQ RowBasis::reduce(std::span<const Rational> v) const {
  if (v.size() != ambient_dim_) throw UsageError("vector length does not match ambient dimension");
  VectorQ w(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rational f = w[pivots_[i]];
    if (sgn(f) == 0) continue;
    const auto r = rows_.row(i);
    for (std::size_t j = pivots_[i]; j < ambient_dim_; ++j) w[j] -= f * r[j];
  }
  return w;
}

bool RowBasis::contains(std::span<const Rational> v) const {
  const auto w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool RowBasis::contains(const RowBasis& other) const {
  if (other.ambient_dim_ != ambient_dim_) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.rows_.row(i))) return false;
  return true;
}

RowBasis kernel_basis(const MatrixQ& m) {
  const auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  MatrixQ k(0, m.cols());
  VectorQ v(m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::fill(v.begin(), v.end(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.rank; ++i) v[e.pivots[i]] = -e.reduced(i, f);
    k.append_row(v);
  }
  return RowBasis::span_of(k);
}

namespace {

void check_shared_ambient(std::span<const RowBasis> spaces) {
  for (const auto& s : spaces)
    if (s.ambient_dim() != spaces.front().ambient_dim())
      throw UsageError("subspaces live in different ambient spaces");
}

// X ∩ Y as {a X : a X = b Y}, i.e. the X-image of ker [X^T | -Y^T].
RowBasis intersect_pair(const RowBasis& x, const RowBasis& y) {
  const std::size_t m = x.ambient_dim();
  if (x.is_zero() || y.is_zero()) return RowBasis(m);
  const std::size_t a = x.dim();
  const std::size_t b = y.dim();
  MatrixQ stacked(m, a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < m; ++j) stacked(j, i) = x.rows()(i, j);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < m; ++j) stacked(j, a + i) = -y.rows()(i, j);
  const auto kernel = kernel_basis(stacked);
  MatrixQ image(kernel.dim(), m);
  for (std::size_t k = 0; k < kernel.dim(); ++k)
    for (std::size_t i = 0; i < a; ++i) {
      const Rational& c = kernel.rows()(k, i);
      if (sgn(c) == 0) continue;
      for (std::size_t j = 0; j < m; ++j) image(k, j) += c * x.rows()(i, j);
    }
  return RowBasis::span_of(image);
}

}  // namespace

RowBasis intersect_row_spaces(std::span<const RowBasis> spaces) {
  if (spaces.empty()) throw UsageError("intersection of an empty list of subspaces");
  check_shared_ambient(spaces);
  RowBasis acc = spaces.front();
  for (std::size_t i = 1; i < spaces.size() && !acc.is_zero(); ++i) {
    if (spaces[i].contains(acc)) continue;
    acc = intersect_pair(acc, spaces[i]);
  }
  return acc;
}

RowBasis sum_row_spaces(std::span<const RowBasis> spaces) {
  if (spaces.empty()) throw UsageError("sum of an empty list of subspaces");
  check_shared_ambient(spaces);
  MatrixQ stacked(0, spaces.front().ambient_dim());
  for (const auto& s : spaces)
    for (std::size_t i = 0; i < s.dim(); ++i) stacked.append_row(s.rows().row(i));
  return RowBasis::span_of(stacked);
}

bool in_row_space(std::span<const Rational> v, const RowBasis& basis) { return basis.contains(v); }

std::vector<VectorQ> pivot_complement(const RowBasis& space, const RowBasis& sub) {
  if (space.ambient_dim() != sub.ambient_dim()) throw UsageError("complement across ambient spaces");
  std::vector<VectorQ> picked;
  MatrixQ running = sub.rows();
  RowBasis current = sub;
  for (std::size_t i = 0; i < space.dim(); ++i) {
    if (current.contains(space.rows().row(i))) continue;
    picked.push_back(space.row(i));
    running.append_row(space.rows().row(i));
    current = RowBasis::span_of(running);
  }
  return picked;
}

}  // namespace skewinv
