#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "endindex/poly_matrix.hpp"

namespace endindex {

/// Bounded complex of free Λ-modules C_0 <- C_1 <- ... <- C_n, the cellular
/// chains of the infinite cyclic cover.
class ChainComplex {
 public:
  ChainComplex() = default;

  /// Validates shapes and d∘d = 0 exactly; throws InvalidComplex otherwise.
  /// boundaries[k-1] is d_k : C_k -> C_{k-1}, shaped ranks[k-1] x ranks[k].
  ChainComplex(std::vector<std::size_t> ranks, std::vector<LaurentMatrix> boundaries);

  /// Number of chain groups (n + 1); zero for the empty complex.
  std::size_t size() const { return ranks_.size(); }
  std::size_t top_degree() const { return ranks_.empty() ? 0 : ranks_.size() - 1; }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  std::size_t rank(std::size_t k) const { return k < ranks_.size() ? ranks_[k] : 0; }
  const std::vector<LaurentMatrix>& boundaries() const { return boundaries_; }

  /// d_k for any k >= 0, including the zero maps d_0 and d_{n+1}.
  LaurentMatrix boundary(std::size_t k) const;

 private:
  std::vector<std::size_t> ranks_;
  std::vector<LaurentMatrix> boundaries_;
};

/// Finite simplicial complex with an integral 1-cocycle classifying a Z-cover.
struct SimplicialInput {
  std::size_t vertices = 0;
  /// simplices[d] lists the d-simplices as strictly increasing vertex tuples;
  /// simplices[0] is implied by `vertices` and may be left empty.
  std::vector<std::vector<std::vector<std::size_t>>> simplices;
  /// Value on each edge (u, v) with u < v.
  std::map<std::pair<std::size_t, std::size_t>, long long> cocycle;

  std::size_t dimension() const;
  /// Simplices of dimension d, materializing the vertex list for d = 0.
  std::vector<std::vector<std::size_t>> cells(std::size_t d) const;
  /// c(u, v), extended antisymmetrically; 0 when u == v.
  long long cocycle_value(std::size_t u, std::size_t v) const;
};

/// Checks vertex ranges, ordering, face closure, cocycle coverage, and the
/// cocycle condition; throws InvalidComplex.
void validate(const SimplicialInput& x);

/// Lifts each simplex with its minimal vertex at level 0: the i-th face gets
/// coefficient (-1)^i t^{c(v_0, r(face))}.
ChainComplex lift_simplicial(const SimplicialInput& x);

/// Dimension and Euler characteristic of the end-periodic manifold.
struct ManifoldContext {
  int dim = 0;
  long long chi = 0;
};

struct EulerCharacteristic {
  long long value = 0;
  std::optional<std::string> warning;
};

EulerCharacteristic euler_characteristic_X(const ChainComplex& cc);

/// Elementary complex whose homology in degree k is the direct sum of
/// Λ/(f) over factors_by_degree[k]; top degree is factors_by_degree.size().
ChainComplex realize_torsion_complex(const std::vector<std::vector<LaurentPoly>>& factors_by_degree);

}  // namespace endindex
