#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "endindex/homology.hpp"

namespace endindex {

/// Dimensions of H^k of Hom_Λ(C_*, C_z), k = 0..n.
struct TwistedFiber {
  std::complex<double> z;
  std::optional<GaussianRational> exact_z;
  std::vector<std::size_t> dims;

  /// Σ (-1)^k dims[k]; equals Σ (-1)^k rank C_k for every z.
  long long euler_characteristic() const;
};

/// dim H^k_z = rank C_k - rank d_k(z) - rank d_{k+1}(z), with exact ranks over Q(i).
TwistedFiber twisted_dims(const ChainComplex& cc, const GaussianRational& z);
/// Same with numeric ranks (relative singular-value threshold).
TwistedFiber twisted_dims(const ChainComplex& cc, std::complex<double> z,
                          double rel_tol = kNumericRankTolerance);

/// Universal-coefficient prediction: in degree k, one dimension for each
/// invariant factor of H_k vanishing at z (Hom) plus one for each factor of
/// H_{k-1} vanishing at z (Ext). One entry per homology degree, plus one more
/// when the top degree carries torsion (its Ext term). Throws NotFinite on a
/// free summand.
std::vector<std::size_t> uct_dims(const HomologyModule& h, const GaussianRational& z);

struct FredholmVerdict {
  double delta = 0.0;
  bool symbolic = false;  ///< authoritative
  bool numeric = false;
  std::string reason;
  /// Sample points where the evaluated complex was not exact.
  std::vector<std::complex<double>> failing_samples;

  bool agree() const { return symbolic == numeric; }
};

/// Exactness of the twisted complexes on the circle |z| = e^δ, decided from
/// the homology (symbolic) and by sampling `samples` points (numeric).
FredholmVerdict fredholm_check(const ChainComplex& cc, double delta, std::size_t samples,
                               double rel_tol = kNumericRankTolerance);

/// dim Hom_Λ(Λ/(t-λ)^m, ℓ²_{δ1δ2}): m when δ2 < δ1 and e^{δ2} < |λ| < e^{δ1},
/// otherwise 0. Throws WeightCircle when |λ| is e^{δ1} or e^{δ2}.
std::size_t l2_hom_dim_analytic(std::complex<double> lambda, unsigned m, double delta1, double delta2);

struct WeightedWindow {
  std::complex<double> lambda;
  unsigned m = 1;
  double delta1 = 0.0;
  double delta2 = 0.0;
  std::size_t half_width = 200;
  double tol = kNumericRankTolerance;
};

struct TruncatedKernel {
  /// Kernel directions whose mass in the outer tenth of the window is below 1e-3.
  std::size_t count = 0;
  /// Numerical nullity of the truncated operator before the decay filter.
  std::size_t nullity = 0;
  /// Boundary mass fraction of each optimal kernel direction, ascending.
  std::vector<double> boundary_fractions;
};

/// Brute-force kernel of (t - λ)^m on ℓ²_{δ1δ2}, truncated to indices -N..N.
/// Throws InsufficientWindow when N < ln(1/tol) / gap.
TruncatedKernel l2_kernel_truncated(const WeightedWindow& w);

struct CupCheck {
  /// dim H^k(X; Q), k = 0..n.
  std::vector<std::size_t> betti;
  /// rank of ∪ξ : H^k -> H^{k+1}, k = 0..n-1.
  std::vector<std::size_t> cup_ranks;
  /// dim ker(∪ξ on H^k) - rank(∪ξ into H^k), k = 0..n.
  std::vector<std::size_t> defects;
  /// ∪ξ maps cocycles to cocycles and coboundaries to coboundaries.
  bool descends = true;
  bool exact = false;
};

/// Exactness of H^0 -> H^1 -> ... -> H^n under cup product with the cover's
/// class, using (α ∪ ξ)(v_0..v_{k+1}) = α(v_0..v_k) ξ(v_k, v_{k+1}).
CupCheck cup_product_check(const SimplicialInput& x);

}  // namespace endindex
