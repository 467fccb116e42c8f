#include "skewinv/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "skewinv/errors.hpp"

namespace skewinv {

namespace {

constexpr std::string_view kWedge = "\xE2\x88\xA7";  // U+2227

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

// Nondecreasing (strictly increasing when `strict`) index words of length d, in lex order.
void enumerate_words(std::size_t n, std::size_t d, bool strict, std::vector<std::size_t>& word,
                     std::size_t start, std::vector<Monomial>& out) {
  if (word.size() == d) {
    Monomial m{std::vector<std::uint16_t>(n, 0)};
    for (auto i : word) ++m.exponents[i];
    out.push_back(std::move(m));
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    word.push_back(i);
    enumerate_words(n, d, strict, word, strict ? i + 1 : i, out);
    word.pop_back();
  }
}

}  // namespace

std::string_view to_string(SignRule rule) {
  switch (rule) {
    case SignRule::exterior:
      return "exterior";
    case SignRule::skew_minus_one:
      return "skew";
    case SignRule::symmetric:
      return "symmetric";
  }
  return "unknown";
}

SignRule parse_sign_rule(std::string_view text) {
  if (text == "exterior") return SignRule::exterior;
  if (text == "skew" || text == "skew_minus_one") return SignRule::skew_minus_one;
  if (text == "symmetric") return SignRule::symmetric;
  throw ParseError("unknown sign rule '" + std::string(text) + "'");
}

std::size_t Monomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), std::size_t{0});
}

bool Monomial::is_squarefree() const {
  return std::all_of(exponents.begin(), exponents.end(), [](auto e) { return e <= 1; });
}

std::vector<std::size_t> Monomial::word() const {
  std::vector<std::size_t> w;
  for (std::size_t i = 0; i < exponents.size(); ++i) w.insert(w.end(), exponents[i], i);
  return w;
}

bool operator<(const Monomial& a, const Monomial& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  return b.exponents < a.exponents;
}

AlgebraCtx::AlgebraCtx(std::size_t n, SignRule rule, std::size_t cap, std::vector<std::string> names)
    : n_(n), rule_(rule), cap_(cap), names_(std::move(names)), cache_(cap + 1) {}

CtxPtr AlgebraCtx::make(std::size_t n, SignRule rule, std::optional<std::size_t> cap,
                        std::vector<std::string> names) {
  if (n == 0) throw UsageError("an algebra needs at least one variable");
  if (names.empty()) names = default_names(n);
  if (names.size() != n) throw UsageError("variable name count does not match n");
  std::size_t effective = n;
  if (rule != SignRule::exterior) {
    if (!cap || *cap == 0) throw UsageError("skew and symmetric rules need an explicit positive degree cap");
    effective = *cap;
  }
  return std::make_shared<const AlgebraCtx>(n, rule, effective, std::move(names));
}

const GradedBasis& AlgebraCtx::basis(std::size_t d) const {
  static const GradedBasis kEmpty{};
  if (d > cap_) {
    if (rule_ == SignRule::exterior) return kEmpty;
    throw UsageError("degree " + std::to_string(d) + " exceeds the cap " + std::to_string(cap_));
  }
  std::lock_guard lock(cache_mutex_);
  if (!cache_[d]) {
    auto b = std::make_unique<GradedBasis>();
    std::vector<std::size_t> word;
    enumerate_words(n_, d, rule_ == SignRule::exterior, word, 0, b->monomials);
    for (std::size_t i = 0; i < b->monomials.size(); ++i) b->index.emplace(b->monomials[i], i);
    cache_[d] = std::move(b);
  }
  return *cache_[d];
}

bool AlgebraCtx::same_as(const AlgebraCtx& other) const {
  return this == &other || (n_ == other.n_ && rule_ == other.rule_ && cap_ == other.cap_ && names_ == other.names_);
}

std::vector<Monomial> graded_basis(const AlgebraCtx& ctx, std::size_t d) { return ctx.basis(d).monomials; }

std::optional<SignedMonomial> multiply_monomials(const AlgebraCtx& ctx, const Monomial& a, const Monomial& b) {
  const std::size_t n = ctx.n();
  if (a.degree() + b.degree() > ctx.cap()) return std::nullopt;
  SignedMonomial out{Monomial{std::vector<std::uint16_t>(n, 0)}, 1};
  for (std::size_t i = 0; i < n; ++i) {
    out.monomial.exponents[i] = static_cast<std::uint16_t>(a.exponents[i] + b.exponents[i]);
    if (ctx.rule() == SignRule::exterior && out.monomial.exponents[i] > 1) return std::nullopt;
  }
  if (ctx.rule() != SignRule::symmetric) {
    // Each factor x_j of b moves left past every x_i of a with i > j.
    std::size_t parity = 0;
    std::size_t greater = 0;
    for (std::size_t j = n; j-- > 0;) {
      parity += greater * b.exponents[j];
      greater += a.exponents[j];
    }
    if (parity % 2 == 1) out.sign = -1;
  }
  return out;
}

SkewPoly::SkewPoly(CtxPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw UsageError("polynomial without an algebra context");
}

SkewPoly SkewPoly::constant(CtxPtr ctx, const Rational& c) {
  const std::size_t n = ctx->n();
  SkewPoly p(std::move(ctx));
  p.add_term(Monomial{std::vector<std::uint16_t>(n, 0)}, c);
  return p;
}

SkewPoly SkewPoly::variable(CtxPtr ctx, std::size_t i) {
  if (i >= ctx->n()) throw UsageError("variable index out of range");
  Monomial m{std::vector<std::uint16_t>(ctx->n(), 0)};
  m.exponents[i] = 1;
  return monomial(std::move(ctx), std::move(m));
}

SkewPoly SkewPoly::monomial(CtxPtr ctx, Monomial m, const Rational& c) {
  SkewPoly p(std::move(ctx));
  p.add_term(m, c);
  return p;
}

SkewPoly SkewPoly::linear(CtxPtr ctx, const LinearForm& form) {
  if (form.coefficients.size() != ctx->n()) throw UsageError("linear form length does not match n");
  SkewPoly p(ctx);
  for (std::size_t i = 0; i < ctx->n(); ++i) {
    Monomial m{std::vector<std::uint16_t>(ctx->n(), 0)};
    m.exponents[i] = 1;
    p.add_term(m, form.coefficients[i]);
  }
  return p;
}

std::optional<std::size_t> SkewPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const auto d = terms_.begin()->first.degree();
  if (terms_.rbegin()->first.degree() != d) return std::nullopt;
  return d;
}

std::size_t SkewPoly::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

Rational SkewPoly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SkewPoly::add_term(const Monomial& m, const Rational& c) {
  if (m.exponents.size() != ctx_->n()) throw UsageError("monomial has the wrong number of variables");
  if (m.degree() > ctx_->cap()) {
    if (ctx_->rule() == SignRule::exterior) throw UsageError("monomial above the top degree");
    return;
  }
  if (ctx_->rule() == SignRule::exterior && !m.is_squarefree()) return;
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

SkewPoly SkewPoly::component(std::size_t d) const {
  SkewPoly out(ctx_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) out.terms_.emplace(m, c);
  return out;
}

void SkewPoly::require_same_ctx(const SkewPoly& other) const {
  if (!ctx_->same_as(*other.ctx_)) throw UsageError("polynomials from different algebra contexts");
}

SkewPoly& SkewPoly::operator+=(const SkewPoly& rhs) {
  require_same_ctx(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

SkewPoly& SkewPoly::operator-=(const SkewPoly& rhs) {
  require_same_ctx(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

SkewPoly& SkewPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SkewPoly SkewPoly::operator-() const {
  SkewPoly out = *this;
  for (auto& [m, v] : out.terms_) v = -v;
  return out;
}

bool operator==(const SkewPoly& a, const SkewPoly& b) {
  return a.ctx_->same_as(*b.ctx_) && a.terms_ == b.terms_;
}

SkewPoly mul(const SkewPoly& f, const SkewPoly& g) {
  if (!f.ctx()->same_as(*g.ctx())) throw UsageError("product of polynomials from different algebra contexts");
  SkewPoly out(f.ctx());
  for (const auto& [ma, ca] : f.terms())
    for (const auto& [mb, cb] : g.terms()) {
      auto p = multiply_monomials(*f.ctx(), ma, mb);
      if (!p) continue;
      Rational c = ca * cb;
      if (p->sign < 0) c = -c;
      out.add_term(p->monomial, c);
    }
  return out;
}

namespace {

void check_skew_images(std::span<const LinearForm> images) {
  std::vector<bool> used;
  for (const auto& img : images) {
    std::size_t support = 0;
    std::size_t where = 0;
    for (std::size_t k = 0; k < img.coefficients.size(); ++k)
      if (sgn(img.coefficients[k]) != 0) {
        ++support;
        where = k;
      }
    if (support == 0) continue;
    if (support > 1)
      throw UnsupportedSubstitution("skew rule admits only monomial substitutions x_i -> c x_j");
    if (used.size() <= where) used.resize(where + 1, false);
    if (used[where]) throw UnsupportedSubstitution("skew rule substitution sends two variables to the same one");
    used[where] = true;
  }
}

}  // namespace

SkewPoly substitute(const SkewPoly& f, const CtxPtr& target, std::span<const LinearForm> images) {
  const auto& source = *f.ctx();
  if (images.size() != source.n()) throw UsageError("substitution needs one image per source variable");
  if (source.rule() != target->rule()) throw UsageError("substitution between algebras with different sign rules");
  for (const auto& img : images)
    if (img.coefficients.size() != target->n()) throw UsageError("image length does not match the target algebra");
  if (source.rule() == SignRule::skew_minus_one) check_skew_images(images);

  std::vector<SkewPoly> image_polys;
  image_polys.reserve(images.size());
  for (const auto& img : images) image_polys.push_back(SkewPoly::linear(target, img));

  SkewPoly out(target);
  for (const auto& [m, c] : f.terms()) {
    SkewPoly term = SkewPoly::constant(target, c);
    for (auto i : m.word()) {
      term = mul(term, image_polys[i]);
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

VectorQ to_coords(const SkewPoly& f, std::size_t d) {
  const auto& basis = f.ctx()->basis(d);
  VectorQ v(basis.monomials.size());
  for (const auto& [m, c] : f.terms()) {
    const auto it = basis.index.find(m);
    if (it == basis.index.end()) throw UsageError("polynomial is not homogeneous of degree " + std::to_string(d));
    v[it->second] = c;
  }
  return v;
}

SkewPoly from_coords(const CtxPtr& ctx, std::size_t d, std::span<const Rational> v) {
  const auto& basis = ctx->basis(d);
  if (v.size() != basis.monomials.size()) throw UsageError("coordinate vector length does not match graded dimension");
  SkewPoly out(ctx);
  for (std::size_t i = 0; i < v.size(); ++i) out.add_term(basis.monomials[i], v[i]);
  return out;
}

std::string render(const SkewPoly& f) {
  if (f.is_zero()) return "0";
  const auto& ctx = *f.ctx();
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational a = abs(c);
    const bool is_constant = m.degree() == 0;
    if (is_constant || a != 1) {
      out += a.get_str();
      if (!is_constant) out += ' ';
    }
    bool first_factor = true;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      const auto e = m.exponents[i];
      if (e == 0) continue;
      if (!first_factor) out += ctx.rule() == SignRule::exterior ? std::string(kWedge) : std::string(" ");
      first_factor = false;
      out += ctx.names()[i];
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(const CtxPtr& ctx, std::string_view text) : ctx_(ctx), text_(text) {}

  SkewPoly parse() {
    SkewPoly out(ctx_);
    skip_space();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_space();
      if (pos_ == text_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      out += parse_term(sign);
    }
    return out;
  }

 private:
  SkewPoly parse_term(int sign) {
    Rational coef = sign;
    bool have_coef = false;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ < text_.size() && peek() == '/') {
        ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
      coef *= parse_rational(text_.substr(start, pos_ - start));
      have_coef = true;
    }
    SkewPoly term = SkewPoly::constant(ctx_, coef);
    bool have_factor = false;
    while (true) {
      skip_separators();
      if (pos_ == text_.size() || peek() == '+' || peek() == '-') break;
      const std::size_t var = parse_name();
      std::size_t power = 1;
      if (pos_ < text_.size() && peek() == '^') {
        ++pos_;
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected an exponent after '^'");
        power = std::stoul(std::string(text_.substr(start, pos_ - start)));
      }
      const auto x = SkewPoly::variable(ctx_, var);
      for (std::size_t k = 0; k < power; ++k) term = mul(term, x);
      have_factor = true;
    }
    if (!have_coef && !have_factor) fail("empty term");
    return term;
  }

  std::size_t parse_name() {
    std::size_t best = ctx_->n();
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < ctx_->n(); ++i) {
      const auto& name = ctx_->names()[i];
      if (name.size() > best_len && text_.substr(pos_, name.size()) == name) {
        best = i;
        best_len = name.size();
      }
    }
    if (best == ctx_->n()) fail("unknown variable");
    pos_ += best_len;
    return best;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  void skip_separators() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(peek())) || peek() == '*') {
        ++pos_;
      } else if (text_.substr(pos_, kWedge.size()) == kWedge) {
        pos_ += kWedge.size();
      } else {
        break;
      }
    }
  }

  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  const CtxPtr& ctx_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SkewPoly parse_skew_poly(const CtxPtr& ctx, std::string_view text) { return PolyParser(ctx, text).parse(); }

}  // namespace skewinv
