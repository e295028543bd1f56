#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "endindex/errors.hpp"
#include "endindex/rational.hpp"

namespace endindex {

template <class F>
F from_rational(const Rational& r);

template <>
inline Rational from_rational<Rational>(const Rational& r) {
  return r;
}
template <>
inline GaussianRational from_rational<GaussianRational>(const Rational& r) {
  return GaussianRational(r);
}
template <>
inline std::complex<double> from_rational<std::complex<double>>(const Rational& r) {
  return {to_double(r), 0.0};
}

/// Element of Q[t, t^-1], stored densely as t^lowest * (c_0 + c_1 t + ... ).
///
/// The representation is unique: the first and last stored coefficients are
/// nonzero, and the zero polynomial has no coefficients and lowest() == 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int constant) : LaurentPoly(Rational(constant)) {}  // NOLINT
  LaurentPoly(Rational constant);                                  // NOLINT
  LaurentPoly(int lowest, std::vector<Rational> coeffs);

  static LaurentPoly monomial(Rational c, int exponent);
  static LaurentPoly t() { return monomial(Rational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Nonzero monomial c t^k, i.e. a unit of the Laurent ring.
  bool is_unit() const { return coeffs_.size() == 1; }
  int lowest() const { return lowest_; }
  int highest() const { return lowest_ + static_cast<int>(coeffs_.size()) - 1; }
  /// highest - lowest; -1 for the zero polynomial.
  int span() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int exponent) const;
  const Rational& leading() const { return coeffs_.back(); }
  const Rational& trailing() const { return coeffs_.front(); }
  /// Largest coefficient height.
  Integer height() const;

  /// Multiply by t^k.
  LaurentPoly shifted(int k) const;
  /// p(1/t).
  LaurentPoly inverted() const;
  LaurentPoly derivative() const;

  template <class F>
  F evaluate(const F& z) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.lowest_ == b.lowest_ && a.coeffs_ == b.coeffs_;
  }

  /// Human-readable form, e.g. "t^2 - 1/2*t + 3 - 2*t^-1".
  std::string to_string() const;

 private:
  void normalize();

  int lowest_ = 0;
  std::vector<Rational> coeffs_;
};

template <class F>
F LaurentPoly::evaluate(const F& z) const {
  if (is_zero()) return from_rational<F>(Rational(0));
  if (z == from_rational<F>(Rational(0))) {
    if (lowest_ < 0) throw DomainError("evaluating a Laurent polynomial with negative powers at 0");
    if (lowest_ > 0) return from_rational<F>(Rational(0));
  }
  F acc = from_rational<F>(coeffs_.back());
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it)
    acc = acc * z + from_rational<F>(*it);
  if (lowest_ != 0) {
    F base = lowest_ > 0 ? z : from_rational<F>(Rational(1)) / z;
    for (int i = 0; i < std::abs(lowest_); ++i) acc = acc * base;
  }
  return acc;
}

/// Parses expressions such as "t^2 - 1", "-3/2*t^-1 + t", "t - 1/2".
LaurentPoly parse_laurent(std::string_view text);

struct DivMod {
  LaurentPoly quot;
  LaurentPoly rem;
};

/// p = q*quot + rem with rem == 0 or span(rem) < span(q). Throws DomainError on q == 0.
DivMod divmod(const LaurentPoly& p, const LaurentPoly& q);

/// True when q divides p in the Laurent ring (q != 0).
bool divides(const LaurentPoly& q, const LaurentPoly& p);

/// Exact quotient; throws DomainError when q does not divide p.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

/// Unit-normalized representative of an associate class: lowest exponent 0,
/// nonzero constant term, leading coefficient 1.
class CanonicalPoly {
 public:
  /// The unit 1.
  CanonicalPoly() : poly_(1) {}

  const LaurentPoly& poly() const { return poly_; }
  int degree() const { return poly_.span(); }
  bool is_one() const { return poly_.span() == 0; }
  std::string to_string() const { return poly_.to_string(); }

  friend bool operator==(const CanonicalPoly& a, const CanonicalPoly& b) { return a.poly_ == b.poly_; }
  friend CanonicalPoly canonicalize(const LaurentPoly& p);

 private:
  explicit CanonicalPoly(LaurentPoly p) : poly_(std::move(p)) {}
  LaurentPoly poly_;
};

/// Throws DomainError on the zero polynomial.
CanonicalPoly canonicalize(const LaurentPoly& p);

/// Canonical generator of the ideal (p, q). Throws DomainError when both are zero.
CanonicalPoly gcd(const LaurentPoly& p, const LaurentPoly& q);

CanonicalPoly operator*(const CanonicalPoly& a, const CanonicalPoly& b);

/// Canonical form of t^deg p(1/t); its roots are the inverses of the roots of p.
CanonicalPoly reversal(const CanonicalPoly& p);

struct SquareFreeFactor {
  CanonicalPoly factor;
  unsigned multiplicity;
};

/// Yun's algorithm: p = prod f_i^{m_i} with f_i square-free, pairwise coprime,
/// m_i strictly increasing. The unit 1 yields an empty list.
std::vector<SquareFreeFactor> squarefree_decomposition(const CanonicalPoly& p);

}  // namespace endindex
