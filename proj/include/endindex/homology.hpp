#pragma once

#include <cstddef>
#include <vector>

#include "endindex/complex_model.hpp"

namespace endindex {

/// H_k ≅ Λ^{free_rank} ⊕ Λ/(q_1) ⊕ ... ⊕ Λ/(q_m), q_i | q_{i+1}, all q_i nonconstant.
struct HomologyDegree {
  std::size_t free_rank = 0;
  std::vector<CanonicalPoly> invariant_factors;

  /// dim over C of the torsion part: sum of factor degrees.
  std::size_t torsion_dimension() const;
};

struct HomologyModule {
  std::vector<HomologyDegree> degrees;

  /// Module with H_k = ⊕ Λ/(f) for f in factors_by_degree[k], no free part.
  /// Factors need not form a divisibility chain; they are normalized to one.
  static HomologyModule torsion(const std::vector<std::vector<LaurentPoly>>& factors_by_degree);
};

/// Homology of a Laurent chain complex: for each k the Smith form of d_k gives
/// a basis of ker d_k, and the Smith form of d_{k+1} written in that basis
/// gives the invariant factors.
HomologyModule homology(const ChainComplex& cc);

struct Finiteness {
  bool finite = true;
  std::vector<std::size_t> infinite_degrees;
};

Finiteness finiteness_check(const HomologyModule& h);

/// Characteristic polynomials A_k of the deck transformation on H_k.
struct AlexanderData {
  std::vector<CanonicalPoly> polys;

  const CanonicalPoly& at(std::size_t k) const;
  /// A_k, or 1 past the stored range.
  CanonicalPoly get(std::size_t k) const { return k < polys.size() ? polys[k] : CanonicalPoly(); }
  /// A_0 * ... * A_{n-1}.
  CanonicalPoly product(std::size_t n) const;
};

/// A_k = product of the invariant factors of H_k. Throws NotFinite when any
/// degree has a free summand.
AlexanderData alexander_polynomials(const HomologyModule& h);

}  // namespace endindex
