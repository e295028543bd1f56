#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace endindex {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical text form: "p/q" with q > 0, or "p" when q = 1.
std::string to_string(const Rational& r);

/// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

/// max(|numerator|, denominator); a size measure used for pivot tie-breaks.
Integer height(const Rational& r);

double to_double(const Rational& r);

/// Exact element of Q(i).
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(int r) : re(r), im(0) {}  // NOLINT

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussianRational conj() const { return {re, -im}; }
  /// |z|^2, exact.
  Rational norm() const { return Rational(re * re + im * im); }
  GaussianRational inverse() const;
  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::string to_string(const GaussianRational& z);

/// Accepts "a", "a/b", or "re,im" where each part is a rational.
GaussianRational parse_gaussian(std::string_view text);

}  // namespace endindex
