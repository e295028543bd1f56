#pragma once

// Deterministic random generators shared by the unit and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "endindex/complex_model.hpp"
#include "endindex/homology.hpp"

namespace endindex::gen {

using Rng = std::mt19937_64;

inline long long uniform(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Rational small_rational(Rng& rng, long long num = 4, long long den = 3) {
  Rational r(static_cast<long>(uniform(rng, -num, num)), static_cast<unsigned long>(uniform(rng, 1, den)));
  r.canonicalize();
  return r;
}

/// Laurent polynomial with span <= max_span and lowest exponent in [-1, 1];
/// zero with probability zero_prob.
inline LaurentPoly random_laurent(Rng& rng, int max_span, double zero_prob = 0.3) {
  if (uniform_real(rng, 0, 1) < zero_prob) return LaurentPoly();
  int span = static_cast<int>(uniform(rng, 0, max_span));
  std::vector<Rational> cs;
  for (int i = 0; i <= span; ++i) cs.push_back(small_rational(rng, 3, 2));
  if (cs.back() == 0) cs.back() = 1;
  return LaurentPoly(static_cast<int>(uniform(rng, -1, 1)), cs);
}

inline LaurentMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int max_span) {
  LaurentMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_laurent(rng, max_span);
  return m;
}

/// A unimodular matrix together with its inverse, built from elementary moves.
struct UnimodularPair {
  LaurentMatrix u;
  LaurentMatrix inverse;
};

inline UnimodularPair random_unimodular(Rng& rng, std::size_t n, int moves) {
  UnimodularPair p{LaurentMatrix::identity(n), LaurentMatrix::identity(n)};
  if (n < 2) {
    // Only units are available: c t^e.
    if (n == 1) {
      Rational c(static_cast<long>(uniform(rng, 1, 3)));
      int e = static_cast<int>(uniform(rng, -1, 1));
      p.u(0, 0) = LaurentPoly::monomial(c, e);
      p.inverse(0, 0) = LaurentPoly::monomial(Rational(1) / c, -e);
    }
    return p;
  }
  for (int s = 0; s < moves; ++s) {
    std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(n) - 2));
    if (j >= i) ++j;
    LaurentPoly c = LaurentPoly::monomial(small_rational(rng, 2, 2) + 1, static_cast<int>(uniform(rng, -1, 1)));
    // u <- E u with E = I + c e_ij; inverse <- inverse E^{-1}.
    LaurentMatrix e = LaurentMatrix::identity(n), einv = LaurentMatrix::identity(n);
    e(i, j) = c;
    einv(i, j) = -c;
    p.u = e * p.u;
    p.inverse = p.inverse * einv;
  }
  return p;
}

/// A factor with a planted root: a product of linear factors over small
/// rationals, occasionally t^2 + 1 (roots ±i) or a square.
inline LaurentPoly planted_factor(Rng& rng, std::vector<Rational>& rational_roots, bool& has_i) {
  static const std::vector<Rational> roots = {Rational(1), Rational(2), Rational(-1), Rational(1, 2),
                                              Rational(3), Rational(-2, 3), Rational(3, 2)};
  LaurentPoly f(1);
  long long kind = uniform(rng, 0, 5);
  if (kind == 0) {
    has_i = true;
    return LaurentPoly(0, {Rational(1), Rational(0), Rational(1)});
  }
  int count = kind == 1 ? 2 : 1;
  for (int i = 0; i < count; ++i) {
    Rational r = roots[static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(roots.size()) - 1))];
    rational_roots.push_back(r);
    f = f * LaurentPoly(0, {Rational(-r), Rational(1)});
  }
  return f;
}

struct PlantedComplex {
  ChainComplex complex;
  std::vector<Rational> rational_roots;
  bool has_i = false;
};

/// A finite complex with planted torsion: the elementary realization of
/// random factors, with every chain group re-based by a random unimodular map.
inline PlantedComplex planted_complex(Rng& rng) {
  PlantedComplex out;
  std::size_t top = static_cast<std::size_t>(uniform(rng, 2, 3));
  std::vector<std::vector<LaurentPoly>> factors(top);
  for (auto& fs : factors) {
    long long count = uniform(rng, 0, 2);
    for (long long i = 0; i < count; ++i) fs.push_back(planted_factor(rng, out.rational_roots, out.has_i));
  }
  ChainComplex base = realize_torsion_complex(factors);
  std::vector<UnimodularPair> basis;
  for (std::size_t k = 0; k < base.size(); ++k) basis.push_back(random_unimodular(rng, base.rank(k), 4));
  std::vector<LaurentMatrix> bs;
  for (std::size_t k = 1; k < base.size(); ++k)
    bs.push_back(basis[k - 1].u * base.boundary(k) * basis[k].inverse);
  out.complex = ChainComplex(base.ranks(), std::move(bs));
  return out;
}

/// Random monic A_k with nonzero constant term and small integer coefficients.
inline AlexanderData random_alexander(Rng& rng, int n) {
  AlexanderData a;
  for (int k = 0; k <= n; ++k) {
    long long deg = uniform(rng, 0, 4);
    std::vector<Rational> cs;
    long long c0 = 0;
    while (c0 == 0) c0 = uniform(rng, -3, 3);
    cs.push_back(Rational(static_cast<long>(c0)));
    for (long long i = 1; i < deg; ++i) cs.push_back(Rational(static_cast<long>(uniform(rng, -3, 3))));
    cs.push_back(Rational(1));
    a.polys.push_back(deg == 0 ? CanonicalPoly() : canonicalize(LaurentPoly(0, cs)));
  }
  return a;
}

/// Triangulated p x q torus (p, q >= 3): vertex (i, j) has index i*q + j.
struct GridTorus {
  std::size_t p = 3, q = 3;
  std::size_t vertex(std::size_t i, std::size_t j) const { return (i % p) * q + (j % q); }
  std::size_t row(std::size_t v) const { return v / q; }

  std::vector<std::vector<std::size_t>> triangles() const {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < q; ++j) {
        std::vector<std::size_t> a{vertex(i, j), vertex(i + 1, j), vertex(i + 1, j + 1)};
        std::vector<std::size_t> b{vertex(i, j), vertex(i, j + 1), vertex(i + 1, j + 1)};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        out.push_back(a);
        out.push_back(b);
      }
    return out;
  }

  /// Number of times the edge u -> v (between neighbours) wraps in the i direction.
  long long winding(std::size_t u, std::size_t v) const {
    long long iu = static_cast<long long>(row(u)), iv = static_cast<long long>(row(v));
    long long d = iv - iu;
    long long P = static_cast<long long>(p);
    if (d > 1) d -= P;
    if (d < -1) d += P;
    return (iu + d - iv) / P;
  }
};

/// Subcomplex spanned by a random subset of the torus triangles (and all
/// their faces), with the winding cocycle plus the coboundary of `potential`.
inline SimplicialInput torus_subcomplex(const GridTorus& g, const std::vector<bool>& keep,
                                        const std::vector<long long>& potential) {
  SimplicialInput x;
  x.vertices = g.p * g.q;
  x.simplices.resize(3);
  std::set<std::vector<std::size_t>> edges;
  auto tris = g.triangles();
  for (std::size_t t = 0; t < tris.size(); ++t) {
    if (!keep[t]) continue;
    x.simplices[2].push_back(tris[t]);
    const auto& s = tris[t];
    edges.insert({s[0], s[1]});
    edges.insert({s[1], s[2]});
    edges.insert({s[0], s[2]});
  }
  for (const auto& e : edges) {
    x.simplices[1].push_back(e);
    x.cocycle[{e[0], e[1]}] = g.winding(e[0], e[1]) + potential[e[1]] - potential[e[0]];
  }
  if (x.simplices[2].empty()) x.simplices.resize(x.simplices[1].empty() ? 1 : 2);
  return x;
}

inline std::vector<bool> random_keep(Rng& rng, std::size_t count, double prob) {
  std::vector<bool> keep(count);
  for (std::size_t i = 0; i < count; ++i) keep[i] = uniform_real(rng, 0, 1) < prob;
  return keep;
}

inline std::vector<long long> random_potential(Rng& rng, std::size_t n) {
  std::vector<long long> g(n);
  for (auto& v : g) v = uniform(rng, -2, 2);
  return g;
}

}  // namespace endindex::gen
