#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "endindex/spectral.hpp"

namespace endindex {

/// The step function δ ↦ ind_δ(M) on the complement of the walls.
struct IndexFunction {
  int n = 0;
  long long chi = 0;
  std::vector<Wall> walls;
  /// One value per open interval, ordered by increasing δ (walls.size() + 1 entries),
  /// from the closed counting formula.
  std::vector<long long> values;
  /// The same values rebuilt by accumulating wall jumps leftwards from (-1)^n χ.
  std::vector<long long> accumulated;
  /// The δ at which each interval was evaluated.
  std::vector<double> samples;

  bool consistent() const { return values == accumulated; }
  /// Human-readable description of every interval where the two constructions differ.
  std::vector<std::string> discrepancies() const;
};

/// ind_δ = (-1)^n χ + Σ_{k=0}^{n-1} (-1)^k #{λ : A_k(λ) = 0, |λ| > e^δ}, counted with
/// multiplicity, evaluated on each interval; also rebuilt from the wall jumps.
IndexFunction index_function(const AlexanderData& alex, const ManifoldContext& ctx,
                             const ExceptionalSet& walls);

/// Closed formula at a single δ (no wall test).
long long closed_formula(const AlexanderData& alex, const ManifoldContext& ctx, double delta);

/// Index at δ; throws OnWall within the certified radius of a wall.
long long index_at(const IndexFunction& f, double delta);

struct JumpBreakdown {
  long long jump = 0;
  /// (k, (-1)^{k+1} m) for each contributing root.
  std::vector<std::pair<std::size_t, long long>> per_degree;
};

/// Value just above the wall minus value just below it.
JumpBreakdown jump_at(const IndexFunction& f, std::size_t wall_index);

struct ExcisionResult {
  double delta1 = 0.0;
  double delta2 = 0.0;
  /// ind_{δ2} - ind_{δ1} read off the step function.
  long long via_index = 0;
  /// Σ_k (-1)^k dim Hom(H_k-eigenspaces, ℓ²_{δ1δ2}), with the sign flipped when δ2 > δ1.
  long long via_lemma = 0;

  bool agree() const { return via_index == via_lemma; }
  long long value() const { return via_index; }
};

/// ind_{δ1δ2}(X̃) computed from the step function and from the annulus lemma.
/// Throws OnWall if either weight lies on a wall.
ExcisionResult excision_index(const IndexFunction& f, const AlexanderData& alex, double delta1,
                              double delta2);

struct DualityPair {
  std::size_t k = 0;
  std::size_t partner = 0;
  bool pass = false;
  std::string lhs;  ///< A_k
  std::string rhs;  ///< reversal of A_{partner}
};

struct ParitySample {
  double delta = 0.0;
  long long value = 0;
  long long mirrored = 0;
  bool pass = false;
};

struct DualityReport {
  std::vector<DualityPair> pairs;
  std::vector<ParitySample> parity;

  bool roots_pass() const;
  bool parity_pass() const;
  bool pass() const { return roots_pass() && parity_pass(); }
};

/// Root symmetry A_k(t) ~ t^deg A_{n-1-k}(1/t) for every pair, and, when an
/// index function is supplied, ind_{-δ} = (-1)^n ind_δ at 10 mirrored points.
DualityReport duality_check(const AlexanderData& alex, int n, const IndexFunction* f = nullptr);

}  // namespace endindex
