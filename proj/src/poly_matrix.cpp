#include "endindex/poly_matrix.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

namespace endindex {

LaurentMatrix SnfResult::diagonal(std::size_t rows, std::size_t cols) const {
  LaurentMatrix d(rows, cols, LaurentPoly());
  for (std::size_t i = 0; i < diag.size(); ++i) d(i, i) = diag[i].poly();
  return d;
}

namespace {

LaurentPoly unit_inverse(const LaurentPoly& u) {
  return LaurentPoly::monomial(Rational(1 / u.trailing()), -u.lowest());
}

// Working state of the reduction; every elementary operation on `a` is
// mirrored on the transforms and their inverses.
class SnfWork {
 public:
  explicit SnfWork(const LaurentMatrix& m)
      : a(m),
        left(LaurentMatrix::identity(m.rows())),
        left_inv(LaurentMatrix::identity(m.rows())),
        right(LaurentMatrix::identity(m.cols())),
        right_inv(LaurentMatrix::identity(m.cols())) {}

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    left.swap_rows(i, j);
    left_inv.swap_cols(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    right.swap_cols(i, j);
    right_inv.swap_rows(i, j);
  }
  // row_i += q * row_s
  void add_row(std::size_t i, std::size_t s, const LaurentPoly& q) {
    if (q.is_zero()) return;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(s, j).is_zero()) a(i, j) += q * a(s, j);
    for (std::size_t j = 0; j < left.cols(); ++j)
      if (!left(s, j).is_zero()) left(i, j) += q * left(s, j);
    for (std::size_t r = 0; r < left_inv.rows(); ++r)
      if (!left_inv(r, i).is_zero()) left_inv(r, s) -= q * left_inv(r, i);
  }
  // col_j += q * col_s
  void add_col(std::size_t j, std::size_t s, const LaurentPoly& q) {
    if (q.is_zero()) return;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (!a(i, s).is_zero()) a(i, j) += q * a(i, s);
    for (std::size_t i = 0; i < right.rows(); ++i)
      if (!right(i, s).is_zero()) right(i, j) += q * right(i, s);
    for (std::size_t c = 0; c < right_inv.cols(); ++c)
      if (!right_inv(j, c).is_zero()) right_inv(s, c) -= q * right_inv(j, c);
  }
  // row_s *= u for a unit u
  void scale_row(std::size_t s, const LaurentPoly& u) {
    LaurentPoly inv = unit_inverse(u);
    for (std::size_t j = 0; j < a.cols(); ++j) a(s, j) *= u;
    for (std::size_t j = 0; j < left.cols(); ++j) left(s, j) *= u;
    for (std::size_t r = 0; r < left_inv.rows(); ++r) left_inv(r, s) *= inv;
  }

  std::optional<std::pair<std::size_t, std::size_t>> pick_pivot(std::size_t s) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    std::tuple<int, Integer> best_key;
    for (std::size_t i = s; i < a.rows(); ++i)
      for (std::size_t j = s; j < a.cols(); ++j) {
        const LaurentPoly& e = a(i, j);
        if (e.is_zero()) continue;
        std::tuple<int, Integer> key{e.span(), e.height()};
        if (!best || key < best_key) {
          best = {i, j};
          best_key = std::move(key);
        }
      }
    return best;
  }

  LaurentMatrix a, left, left_inv, right, right_inv;
};

}  // namespace

SnfResult smith_normal_form(const LaurentMatrix& m) {
  SnfWork w(m);
  std::vector<CanonicalPoly> diag;
  const std::size_t steps = std::min(m.rows(), m.cols());
  for (std::size_t s = 0; s < steps; ++s) {
    bool placed = false;
    while (!placed) {
      auto pivot = w.pick_pivot(s);
      if (!pivot) break;
      w.swap_rows(s, pivot->first);
      w.swap_cols(s, pivot->second);
      const LaurentPoly& p = w.a(s, s);
      w.scale_row(s, unit_inverse(LaurentPoly::monomial(p.leading(), p.lowest())));

      bool clean = true;
      for (std::size_t i = s + 1; i < m.rows(); ++i) {
        if (w.a(i, s).is_zero()) continue;
        auto [q, r] = divmod(w.a(i, s), w.a(s, s));
        w.add_row(i, s, -q);
        if (!r.is_zero()) clean = false;
      }
      for (std::size_t j = s + 1; j < m.cols(); ++j) {
        if (w.a(s, j).is_zero()) continue;
        auto [q, r] = divmod(w.a(s, j), w.a(s, s));
        w.add_col(j, s, -q);
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;  // a strictly smaller remainder now exists

      // Row and column are clear; enforce divisibility of the trailing block.
      std::optional<std::size_t> offender;
      for (std::size_t i = s + 1; i < m.rows() && !offender; ++i)
        for (std::size_t j = s + 1; j < m.cols(); ++j)
          if (!w.a(i, j).is_zero() && !divides(w.a(s, s), w.a(i, j))) {
            offender = i;
            break;
          }
      if (offender) {
        w.add_row(s, *offender, LaurentPoly(1));
        continue;
      }
      diag.push_back(canonicalize(w.a(s, s)));
      placed = true;
    }
    if (!placed) break;
  }
  SnfResult out;
  out.rank = diag.size();
  out.diag = std::move(diag);
  out.left = std::move(w.left);
  out.left_inverse = std::move(w.left_inv);
  out.right = std::move(w.right);
  out.right_inverse = std::move(w.right_inv);
  return out;
}

namespace {

// Bareiss elimination; returns (rank, determinant-if-square).
std::pair<std::size_t, LaurentPoly> bareiss(LaurentMatrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  LaurentPoly prev(1);
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      a.swap_rows(p, r);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a(i, j) = exact_div(a(r, c) * a(i, j) - a(i, c) * a(r, j), prev);
      a(i, c) = LaurentPoly();
    }
    prev = a(r, c);
    ++r;
  }
  LaurentPoly det;
  if (rows == cols && r == rows) det = rows == 0 ? LaurentPoly(1) : a(rows - 1, cols - 1) * Rational(sign);
  if (rows == cols && rows == 0) det = LaurentPoly(1);
  return {r, det};
}

}  // namespace

std::size_t rank_ff(const LaurentMatrix& m) { return bareiss(m).first; }

LaurentPoly determinant(const LaurentMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  return bareiss(m).second;
}

bool is_unimodular(const LaurentMatrix& m) {
  return m.rows() == m.cols() && determinant(m).is_unit();
}

Matrix<GaussianRational> evaluate_matrix(const LaurentMatrix& m, const GaussianRational& z) {
  if (z.is_zero()) throw DomainError("evaluation point must lie in C*");
  Matrix<GaussianRational> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).evaluate(z);
  return out;
}

Eigen::MatrixXcd evaluate_matrix(const LaurentMatrix& m, std::complex<double> z) {
  if (z == 0.0) throw DomainError("evaluation point must lie in C*");
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).evaluate(z);
  return out;
}

std::size_t numeric_rank(const Eigen::MatrixXcd& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  // Floor the scale at 1 so that a lone rounding residue is not read as full rank.
  const double threshold = rel_tol * std::max(sv(0), 1.0);
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > threshold) ++r;
  return r;
}

}  // namespace endindex
