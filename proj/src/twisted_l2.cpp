#include "endindex/twisted_l2.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include <Eigen/SVD>

#include "endindex/spectral.hpp"

namespace endindex {

namespace {

std::size_t dim_at(std::size_t ck, std::size_t r_out, std::size_t r_in) { return ck - r_out - r_in; }

bool vanishes_at(const CanonicalPoly& q, const GaussianRational& z) {
  return q.poly().evaluate<GaussianRational>(z).is_zero();
}

std::size_t count_vanishing(const HomologyDegree& d, const GaussianRational& z) {
  return static_cast<std::size_t>(
      std::count_if(d.invariant_factors.begin(), d.invariant_factors.end(),
                    [&](const CanonicalPoly& q) { return vanishes_at(q, z); }));
}

}  // namespace

long long TwistedFiber::euler_characteristic() const {
  long long s = 0;
  for (std::size_t k = 0; k < dims.size(); ++k)
    s += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(dims[k]);
  return s;
}

TwistedFiber twisted_dims(const ChainComplex& cc, const GaussianRational& z) {
  if (z.is_zero()) throw DomainError("twisted cohomology is undefined at z = 0");
  TwistedFiber f;
  f.z = z.to_complex();
  f.exact_z = z;
  std::vector<std::size_t> ranks(cc.size() + 1, 0);
  for (std::size_t k = 1; k < cc.size(); ++k) ranks[k] = field_rank(evaluate_matrix(cc.boundary(k), z));
  for (std::size_t k = 0; k < cc.size(); ++k) f.dims.push_back(dim_at(cc.rank(k), ranks[k], ranks[k + 1]));
  return f;
}

TwistedFiber twisted_dims(const ChainComplex& cc, std::complex<double> z, double rel_tol) {
  if (z == 0.0) throw DomainError("twisted cohomology is undefined at z = 0");
  TwistedFiber f;
  f.z = z;
  std::vector<std::size_t> ranks(cc.size() + 1, 0);
  for (std::size_t k = 1; k < cc.size(); ++k)
    ranks[k] = numeric_rank(evaluate_matrix(cc.boundary(k), z), rel_tol);
  for (std::size_t k = 0; k < cc.size(); ++k) f.dims.push_back(dim_at(cc.rank(k), ranks[k], ranks[k + 1]));
  return f;
}

std::vector<std::size_t> uct_dims(const HomologyModule& h, const GaussianRational& z) {
  if (z.is_zero()) throw DomainError("twisted cohomology is undefined at z = 0");
  auto fin = finiteness_check(h);
  if (!fin.finite) throw NotFinite(fin.infinite_degrees);
  const std::size_t n = h.degrees.size();
  const bool top_torsion = n > 0 && !h.degrees.back().invariant_factors.empty();
  std::vector<std::size_t> dims(n + (top_torsion ? 1 : 0), 0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t c = count_vanishing(h.degrees[k], z);
    dims[k] += c;  // Hom(H_k, C_z)
    if (k + 1 < dims.size()) dims[k + 1] += c;  // Ext(H_k, C_z)
  }
  return dims;
}

FredholmVerdict fredholm_check(const ChainComplex& cc, double delta, std::size_t samples, double rel_tol) {
  FredholmVerdict v;
  v.delta = delta;

  HomologyModule h = homology(cc);
  auto fin = finiteness_check(h);
  if (!fin.finite) {
    v.symbolic = false;
    v.reason = "free summand in homology degree " + std::to_string(fin.infinite_degrees.front());
  } else {
    v.symbolic = true;
    for (std::size_t k = 0; k < h.degrees.size() && v.symbolic; ++k)
      for (const auto& q : h.degrees[k].invariant_factors) {
        for (const auto& r : find_roots(q, k)) {
          double tol = r.log_radius() + 1e-12 * std::max(1.0, std::abs(delta));
          if (std::abs(r.log_modulus() - delta) <= tol) {
            v.symbolic = false;
            v.reason = "root of modulus e^delta in an invariant factor of H_" + std::to_string(k) + ": " +
                       q.to_string();
            break;
          }
        }
        if (!v.symbolic) break;
      }
    if (v.symbolic) v.reason = "no invariant-factor root on |z| = e^delta";
  }

  const double radius = std::exp(delta);
  for (std::size_t j = 0; j < samples; ++j) {
    double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(samples);
    std::complex<double> z = std::polar(radius, theta);
    auto fiber = twisted_dims(cc, z, rel_tol);
    if (std::any_of(fiber.dims.begin(), fiber.dims.end(), [](std::size_t d) { return d != 0; }))
      v.failing_samples.push_back(z);
  }
  v.numeric = v.failing_samples.empty();
  return v;
}

std::size_t l2_hom_dim_analytic(std::complex<double> lambda, unsigned m, double delta1, double delta2) {
  if (lambda == 0.0) throw DomainError("lambda must be nonzero");
  const double L = std::log(std::abs(lambda));
  if (std::abs(L - delta1) < 1e-12 || std::abs(L - delta2) < 1e-12)
    throw WeightCircle("|lambda| lies on a weight circle");
  return (delta2 < delta1 && delta2 < L && L < delta1) ? m : 0;
}

TruncatedKernel l2_kernel_truncated(const WeightedWindow& w) {
  if (w.lambda == 0.0) throw DomainError("lambda must be nonzero");
  if (w.m == 0) throw DomainError("multiplicity must be positive");
  if (w.half_width == 0) throw DomainError("window half-width must be positive");
  if (!(w.tol > 0.0)) throw DomainError("kernel tolerance must be positive");
  const double L = std::log(std::abs(w.lambda));
  const double gap = std::min(std::abs(L - w.delta1), std::abs(L - w.delta2));
  if (gap < 1e-12) throw WeightCircle("|lambda| lies on a weight circle");
  const auto required = static_cast<std::size_t>(std::ceil(std::log(1.0 / w.tol) / gap));
  if (w.half_width < required) throw InsufficientWindow(w.half_width, required);

  const long long N = static_cast<long long>(w.half_width);
  const long long m = w.m;
  const long long cols = 2 * N + 1;
  if (cols <= m) throw InsufficientWindow(w.half_width, static_cast<std::size_t>(m));
  const long long rows = cols - m;

  auto logw = [&](long long k) { return k < 0 ? w.delta1 * k : w.delta2 * k; };
  // (t - λ)^m = Σ_j C(m, j) (-λ)^{m-j} t^j with (t x)_k = x_{k-1}.
  std::vector<std::complex<double>> coef(m + 1);
  for (long long j = 0; j <= m; ++j) {
    double binom = 1.0;
    for (long long i = 0; i < j; ++i) binom = binom * static_cast<double>(m - i) / static_cast<double>(i + 1);
    coef[j] = binom * std::pow(-w.lambda, static_cast<double>(m - j));
  }

  Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(rows, cols);
  for (long long r = 0; r < rows; ++r) {
    const long long k = r + m - N;  // output index
    for (long long j = 0; j <= m; ++j) {
      const long long src = k - j;
      B(r, src + N) = coef[j] * std::exp(logw(k) - logw(src));
    }
  }

  Eigen::BDCSVD<Eigen::MatrixXcd> svd(B, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double threshold = w.tol * std::max(sv.size() ? sv(0) : 0.0, 1.0);
  long long rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > threshold) ++rank;

  TruncatedKernel out;
  out.nullity = static_cast<std::size_t>(cols - rank);
  if (out.nullity == 0) return out;
  Eigen::MatrixXcd K = svd.matrixV().rightCols(cols - rank);

  // Mass of each kernel direction in the outer tenth of the window.
  const double edge = 0.9 * static_cast<double>(N);
  Eigen::MatrixXcd PK = Eigen::MatrixXcd::Zero(cols, K.cols());
  for (long long p = 0; p < cols; ++p)
    if (std::abs(static_cast<double>(p - N)) > edge) PK.row(p) = K.row(p);
  Eigen::MatrixXcd G = K.adjoint() * PK;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(G);
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
    double frac = std::max(0.0, eig.eigenvalues()(i));
    out.boundary_fractions.push_back(frac);
    if (frac < 1e-3) ++out.count;
  }
  return out;
}

CupCheck cup_product_check(const SimplicialInput& x) {
  validate(x);
  const std::size_t n = x.dimension();
  std::vector<std::vector<std::vector<std::size_t>>> cells;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index;
  for (std::size_t d = 0; d <= n; ++d) {
    cells.push_back(x.cells(d));
    std::map<std::vector<std::size_t>, std::size_t> ix;
    for (std::size_t i = 0; i < cells[d].size(); ++i) ix[cells[d][i]] = i;
    index.push_back(std::move(ix));
  }
  auto count = [&](std::size_t d) { return d <= n ? cells[d].size() : std::size_t{0}; };

  // cob[k] : C^k -> C^{k+1}, the transpose of the untwisted boundary.
  std::vector<Matrix<Rational>> cob;
  for (std::size_t k = 0; k <= n; ++k) {
    Matrix<Rational> d(count(k + 1), count(k), Rational(0));
    if (k < n)
      for (std::size_t s = 0; s < cells[k + 1].size(); ++s) {
        const auto& simplex = cells[k + 1][s];
        for (std::size_t i = 0; i < simplex.size(); ++i) {
          auto face = simplex;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
          d(s, index[k].at(face)) = (i % 2 == 0) ? 1 : -1;
        }
      }
    cob.push_back(std::move(d));
  }
  std::vector<std::size_t> cob_rank;
  for (const auto& d : cob) cob_rank.push_back(field_rank(d));

  CupCheck out;
  for (std::size_t k = 0; k <= n; ++k)
    out.betti.push_back(count(k) - cob_rank[k] - (k > 0 ? cob_rank[k - 1] : 0));

  for (std::size_t k = 0; k < n; ++k) {
    Matrix<Rational> phi(count(k + 1), count(k), Rational(0));
    for (std::size_t s = 0; s < cells[k + 1].size(); ++s) {
      const auto& simplex = cells[k + 1][s];
      std::vector<std::size_t> front(simplex.begin(), simplex.end() - 1);
      phi(s, index[k].at(front)) = Rational(static_cast<long>(x.cocycle_value(simplex[k], simplex[k + 1])));
    }
    Matrix<Rational> phi_z = phi * nullspace(cob[k]);
    if (k + 1 < cob.size() && phi_z.cols() > 0) {
      Matrix<Rational> image = cob[k + 1] * phi_z;
      for (const auto& e : image.data())
        if (e != 0) out.descends = false;
    }
    if (k > 0 && cob[k - 1].cols() > 0 &&
        field_rank(hconcat(cob[k], phi * cob[k - 1])) != cob_rank[k])
      out.descends = false;
    out.cup_ranks.push_back(field_rank(hconcat(cob[k], phi_z)) - cob_rank[k]);
  }

  out.exact = true;
  for (std::size_t k = 0; k <= n; ++k) {
    long long kernel = static_cast<long long>(out.betti[k]) - (k < n ? static_cast<long long>(out.cup_ranks[k]) : 0);
    long long image = k > 0 ? static_cast<long long>(out.cup_ranks[k - 1]) : 0;
    long long defect = kernel - image;
    if (defect < 0) {
      out.descends = false;
      defect = 0;
    }
    out.defects.push_back(static_cast<std::size_t>(defect));
    if (defect != 0) out.exact = false;
  }
  return out;
}

}  // namespace endindex
