#include "endindex/laurent.hpp"

#include <algorithm>
#include <cctype>

namespace endindex {

LaurentPoly::LaurentPoly(Rational constant) {
  if (sgn(constant) != 0) coeffs_.push_back(std::move(constant));
}

LaurentPoly::LaurentPoly(int lowest, std::vector<Rational> coeffs)
    : lowest_(lowest), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(Rational c, int exponent) {
  if (sgn(c) == 0) return {};
  LaurentPoly p;
  p.lowest_ = exponent;
  p.coeffs_.push_back(std::move(c));
  return p;
}

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) != 0; });
  lowest_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) lowest_ = 0;
}

Rational LaurentPoly::coeff(int exponent) const {
  if (exponent < lowest_ || exponent > highest()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(exponent - lowest_)];
}

Integer LaurentPoly::height() const {
  Integer h = 0;
  for (const auto& c : coeffs_) h = std::max(h, endindex::height(c));
  return h;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.lowest_ += k;
  return r;
}

LaurentPoly LaurentPoly::inverted() const {
  if (is_zero()) return {};
  std::vector<Rational> c(coeffs_.rbegin(), coeffs_.rend());
  return {-highest(), std::move(c)};
}

LaurentPoly LaurentPoly::derivative() const {
  std::vector<Rational> c(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] * (lowest_ + static_cast<int>(i));
  return {lowest_ - 1, std::move(c)};
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(lowest_, o.lowest_);
  int hi = std::max(highest(), o.highest());
  std::vector<Rational> c(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + static_cast<std::size_t>(lowest_ - lo)] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i + static_cast<std::size_t>(o.lowest_ - lo)] += o.coeffs_[i];
  lowest_ = lo;
  coeffs_ = std::move(c);
  normalize();
  return *this;
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return {a.lowest_ + b.lowest_, std::move(c)};
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) return *this = LaurentPoly();
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int e = highest(); e >= lowest_; --e) {
    Rational c = coeff(e);
    if (sgn(c) == 0) continue;
    bool neg = sgn(c) < 0;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    Rational a = abs(c);
    if (e == 0) {
      out += endindex::to_string(a);
      continue;
    }
    if (a != 1) out += endindex::to_string(a) + "*";
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  LaurentPoly parse() {
    LaurentPoly acc;
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      acc += term() * Rational(sign);
      first = false;
      skip();
    }
    return acc;
  }

 private:
  LaurentPoly term() {
    Rational c = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = number();
      have_coeff = true;
      skip();
      if (peek() == '*') {
        get();
        skip();
      } else if (peek() != 't') {
        return LaurentPoly(c);
      }
    }
    if (peek() != 't') fail(have_coeff ? "expected 't'" : "expected a coefficient or 't'");
    get();
    skip();
    int e = 1;
    if (peek() == '^') {
      get();
      skip();
      bool paren = peek() == '(';
      if (paren) get();
      int sign = 1;
      if (peek() == '-' || peek() == '+') sign = get() == '-' ? -1 : 1;
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) get();
      if (start == pos_) fail("expected exponent");
      e = sign * std::stoi(std::string(s_.substr(start, pos_ - start)));
      if (paren && get() != ')') fail("expected ')'");
    }
    return LaurentPoly::monomial(c, e);
  }

  Rational number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) get();
    if (peek() == '/') {
      get();
      while (std::isdigit(static_cast<unsigned char>(peek()))) get();
    }
    return parse_rational(s_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse polynomial '" + std::string(s_) + "' at offset " +
                     std::to_string(pos_) + ": " + why);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

// Division of ordinary polynomials (both with lowest exponent 0).
DivMod poly_divmod(LaurentPoly p, const LaurentPoly& q) {
  LaurentPoly quot;
  const Rational& lead = q.leading();
  while (!p.is_zero() && p.highest() >= q.highest()) {
    LaurentPoly m = LaurentPoly::monomial(Rational(p.leading() / lead), p.highest() - q.highest());
    quot += m;
    p -= m * q;
  }
  return {quot, p};
}

LaurentPoly strip(const LaurentPoly& p) { return p.shifted(-p.lowest()); }

}  // namespace

LaurentPoly parse_laurent(std::string_view text) { return PolyParser(text).parse(); }

DivMod divmod(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw DomainError("division by the zero polynomial");
  if (p.is_zero()) return {};
  // p = t^a P, q = t^b Q, P = Q S + R  =>  p = q t^{a-b} S + t^a R.
  auto [s, r] = poly_divmod(strip(p), strip(q));
  return {s.shifted(p.lowest() - q.lowest()), r.shifted(p.lowest())};
}

bool divides(const LaurentPoly& q, const LaurentPoly& p) { return divmod(p, q).rem.is_zero(); }

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  auto [quot, rem] = divmod(p, q);
  if (!rem.is_zero()) throw DomainError("inexact division of " + p.to_string() + " by " + q.to_string());
  return quot;
}

CanonicalPoly canonicalize(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("canonical form of the zero polynomial");
  LaurentPoly s = strip(p);
  s *= Rational(1 / s.leading());
  return CanonicalPoly(std::move(s));
}

CanonicalPoly gcd(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() && q.is_zero()) throw DomainError("gcd of two zero polynomials");
  if (p.is_zero()) return canonicalize(q);
  if (q.is_zero()) return canonicalize(p);
  // Monic remainders keep the rational content from growing along the chain.
  LaurentPoly a = canonicalize(p).poly();
  LaurentPoly b = canonicalize(q).poly();
  if (a.span() < b.span()) std::swap(a, b);
  while (!b.is_zero()) {
    LaurentPoly r = poly_divmod(a, b).rem;
    a = std::move(b);
    b = r.is_zero() ? r : canonicalize(r).poly();
  }
  return canonicalize(a);
}

CanonicalPoly operator*(const CanonicalPoly& a, const CanonicalPoly& b) {
  return canonicalize(a.poly() * b.poly());
}

CanonicalPoly reversal(const CanonicalPoly& p) { return canonicalize(p.poly().inverted()); }

std::vector<SquareFreeFactor> squarefree_decomposition(const CanonicalPoly& p) {
  std::vector<SquareFreeFactor> out;
  if (p.is_one()) return out;
  const LaurentPoly& f = p.poly();
  LaurentPoly df = f.derivative();
  LaurentPoly a = gcd(f, df).poly();
  LaurentPoly b = exact_div(f, a);
  LaurentPoly c = exact_div(df, a);
  LaurentPoly d = c - b.derivative();
  for (unsigned i = 1; b.span() > 0; ++i) {
    LaurentPoly g = gcd(b, d).poly();
    if (g.span() > 0) out.push_back({canonicalize(g), i});
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
  }
  return out;
}

}  // namespace endindex
