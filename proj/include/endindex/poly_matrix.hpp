#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "endindex/laurent.hpp"
#include "endindex/matrix.hpp"

namespace endindex {

using LaurentMatrix = Matrix<LaurentPoly>;

/// Relative singular-value threshold shared by every numeric rank decision.
inline constexpr double kNumericRankTolerance = 1e-9;

/// left * M * right = D, D diagonal with `diag` followed by zeros.
///
/// The inverses of both transforms are carried along so that callers can
/// change coordinates without inverting a Laurent matrix.
struct SnfResult {
  LaurentMatrix left;
  LaurentMatrix left_inverse;
  LaurentMatrix right;
  LaurentMatrix right_inverse;
  std::vector<CanonicalPoly> diag;
  std::size_t rank = 0;

  /// The rows x cols diagonal matrix D.
  LaurentMatrix diagonal(std::size_t rows, std::size_t cols) const;
};

/// Smith normal form over the PID Q[t, t^-1].
///
/// Pivots are chosen by minimal degree span, then smallest coefficient height,
/// then row-major position, and normalized to canonical form as they are
/// placed, so diag[i] | diag[i+1] and every diagonal entry is canonical.
SnfResult smith_normal_form(const LaurentMatrix& m);

/// Rank over the fraction field Q(t), by fraction-free elimination
/// (independent of the Smith form).
std::size_t rank_ff(const LaurentMatrix& m);

/// Determinant by Bareiss fraction-free elimination.
LaurentPoly determinant(const LaurentMatrix& m);

/// A unit of the Laurent ring is a nonzero monomial.
bool is_unimodular(const LaurentMatrix& m);

Matrix<GaussianRational> evaluate_matrix(const LaurentMatrix& m, const GaussianRational& z);
Eigen::MatrixXcd evaluate_matrix(const LaurentMatrix& m, std::complex<double> z);

/// Number of singular values above rel_tol * max(sigma_max, 1).
std::size_t numeric_rank(const Eigen::MatrixXcd& m, double rel_tol = kNumericRankTolerance);

}  // namespace endindex
