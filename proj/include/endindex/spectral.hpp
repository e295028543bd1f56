#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "endindex/homology.hpp"

namespace endindex {

/// A root λ of A_k, with exact multiplicity and an a posteriori error radius.
struct RootDatum {
  std::complex<double> approx;
  /// Set when λ was certified rational by exact evaluation.
  std::optional<Rational> exact;
  double modulus = 0.0;
  /// |λ - approx| <= radius (zero for exact roots).
  double radius = 0.0;
  /// |f(approx)| for the square-free factor f.
  double residual = 0.0;
  unsigned multiplicity = 1;
  std::size_t degree_k = 0;
  CanonicalPoly squarefree_factor;

  double log_modulus() const;
  /// Bound on |ln|λ| - log_modulus()|.
  double log_radius() const;
};

/// Roots of A counted with exact multiplicity: the square-free factors come
/// from Yun's algorithm, each factor is solved by Aberth–Ehrlich iteration,
/// and rational roots are recovered exactly and deflated.
std::vector<RootDatum> find_roots(const CanonicalPoly& a, std::size_t degree_k);

/// Roots of a square-free polynomial (multiplicity and degree fields left at defaults).
std::vector<RootDatum> squarefree_roots(const CanonicalPoly& f);

struct Contribution {
  std::size_t k = 0;
  RootDatum root;

  /// (-1)^{k+1} * multiplicity.
  long long signed_count() const;
};

/// A point δ = ln|λ| of the exceptional set, with all roots of that modulus.
struct Wall {
  double delta = 0.0;
  double radius = 0.0;
  /// |λ| when some contributing root is rational; the others are certified equal.
  std::optional<Rational> exact_modulus;
  std::vector<Contribution> contributions;
  long long jump = 0;

  /// "ln(p/q)" for rational moduli.
  std::optional<std::string> delta_exact() const;
};

struct ExceptionalSet {
  std::vector<Wall> walls;
};

/// Groups roots by modulus. Equality of moduli is decided exactly for
/// rational roots and otherwise certified by counting real roots (Sturm) of
/// the polynomial whose roots include every |λ|^2; an overlap that can be
/// neither merged nor separated raises AmbiguousWall.
ExceptionalSet exceptional_weights(const std::vector<RootDatum>& roots);

/// Roots of A_0 ... A_{n-1}, grouped into walls.
ExceptionalSet exceptional_weights(const AlexanderData& alex, int n);

namespace detail {

/// Characteristic polynomial of a square rational matrix (Hessenberg method).
LaurentPoly characteristic_polynomial(Matrix<Rational> m);

/// A polynomial whose roots include λ_i λ_j for all roots of f (so every |λ|^2).
LaurentPoly product_root_polynomial(const CanonicalPoly& f);

/// Distinct real roots of a square-free polynomial in the closed interval [lo, hi].
std::size_t count_real_roots(const LaurentPoly& f, const Rational& lo, const Rational& hi);

LaurentPoly squarefree_part(const LaurentPoly& f);

}  // namespace detail

}  // namespace endindex
