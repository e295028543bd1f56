#include "endindex/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>

namespace endindex {

double RootDatum::log_modulus() const {
  if (exact) return std::log(to_double(Rational(abs(*exact))));
  return std::log(modulus);
}

double RootDatum::log_radius() const {
  if (exact) return 0.0;
  if (radius >= modulus) return std::numeric_limits<double>::infinity();
  return radius / (modulus - radius);
}

long long Contribution::signed_count() const {
  long long m = root.multiplicity;
  return (k % 2 == 0) ? -m : m;
}

std::optional<std::string> Wall::delta_exact() const {
  if (!exact_modulus) return std::nullopt;
  return "ln(" + to_string(*exact_modulus) + ")";
}

namespace {

using cplx = std::complex<double>;
using lcplx = std::complex<long double>;

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::vector<cplx> to_complex_coeffs(const LaurentPoly& f) {
  std::vector<cplx> c;
  for (const auto& x : f.coeffs()) c.emplace_back(to_double(x), 0.0);
  return c;
}

template <class C>
std::pair<C, C> horner_with_derivative(const std::vector<C>& a, C z) {
  C p = a.back(), dp = 0;
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[i];
  }
  return {p, dp};
}

// Simultaneous Aberth–Ehrlich iteration; `a` is ascending with a.back() != 0.
std::vector<cplx> aberth(const std::vector<cplx>& a) {
  const std::size_t d = a.size() - 1;
  std::vector<cplx> z(d);
  double r = std::pow(std::abs(a.front() / a.back()), 1.0 / static_cast<double>(d));
  if (!(r > 0.0) || !std::isfinite(r)) r = 1.0;
  // Fixed initialization: scaled roots of unity with an irrational phase offset.
  for (std::size_t j = 0; j < d; ++j)
    z[j] = std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(d) + 0.4);
  for (int iter = 0; iter < 1000; ++iter) {
    bool done = true;
    for (std::size_t j = 0; j < d; ++j) {
      auto [p, dp] = horner_with_derivative(a, z[j]);
      if (p == 0.0) continue;
      cplx ratio = p / dp;
      cplx s = 0;
      for (std::size_t k = 0; k < d; ++k)
        if (k != j) s += 1.0 / (z[j] - z[k]);
      cplx w = ratio / (1.0 - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[j] -= w;
      if (std::abs(w) > 4 * kEps * std::max(1.0, std::abs(z[j]))) done = false;
    }
    if (done) break;
  }
  return z;
}

// Newton steps in extended precision against the exact coefficients.
cplx polish(const LaurentPoly& f, cplx z0) {
  std::vector<lcplx> a;
  for (const auto& x : f.coeffs()) a.emplace_back(static_cast<long double>(to_double(x)), 0.0L);
  lcplx z(z0.real(), z0.imag());
  for (int i = 0; i < 3; ++i) {
    auto [p, dp] = horner_with_derivative(a, z);
    if (dp == 0.0L) break;
    lcplx next = z - p / dp;
    if (std::abs(next - z) > 1e-6L * std::max(1.0L, std::abs(z))) break;  // not in the quadratic basin
    z = next;
  }
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

// Continued-fraction convergents of x with denominators up to `bound`.
std::vector<Rational> convergents(double x, double bound) {
  std::vector<Rational> out;
  if (!std::isfinite(x) || std::abs(x) > 1e15) return out;
  Integer h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
  long double rem = x;
  for (int i = 0; i < 64; ++i) {
    long double fl = std::floor(rem);
    Integer a(static_cast<double>(fl));
    Integer h = a * h_prev + h_prev2;
    Integer k = a * k_prev + k_prev2;
    if (k.get_d() > bound) break;
    out.emplace_back(h, k);
    out.back().canonicalize();
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    long double frac = rem - fl;
    if (frac < 1e-18L) break;
    rem = 1.0L / frac;
  }
  return out;
}

// Leading coefficient of the primitive integer multiple of f; bounds rational-root denominators.
double denominator_bound(const LaurentPoly& f) {
  Integer l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  Integer g = 0;
  for (const auto& c : f.coeffs()) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Integer lead = abs(f.leading().get_num() * (l / f.leading().get_den())) / g;
  return std::min(lead.get_d(), 1e12);
}

RootDatum exact_root(const Rational& r) {
  RootDatum d;
  d.exact = r;
  d.approx = {to_double(r), 0.0};
  d.modulus = std::abs(d.approx.real());
  return d;
}

}  // namespace

std::vector<RootDatum> squarefree_roots(const CanonicalPoly& f) {
  std::vector<RootDatum> out;
  LaurentPoly rest = f.poly();
  while (rest.span() > 0) {
    if (rest.span() == 1) {
      out.push_back(exact_root(Rational(-rest.coeff(0) / rest.coeff(1))));
      break;
    }
    std::vector<cplx> z = aberth(to_complex_coeffs(rest));
    for (auto& zi : z) zi = polish(rest, zi);

    std::optional<Rational> found;
    const double bound = denominator_bound(rest);
    for (const auto& zi : z) {
      if (std::abs(zi.imag()) > 1e-6 * std::max(1.0, std::abs(zi))) continue;
      for (const auto& c : convergents(zi.real(), bound))
        if (sgn(rest.evaluate(c)) == 0) {
          found = c;
          break;
        }
      if (found) break;
    }
    if (found) {
      out.push_back(exact_root(*found));
      rest = exact_div(rest, LaurentPoly(0, {Rational(-*found), Rational(1)}));
      continue;
    }

    // Weierstrass inclusion radii: discs D(z_i, d |f(z_i)| / |lc prod (z_i - z_j)|)
    // cover the roots, with rounding in the evaluation of f added in.
    const auto a = to_complex_coeffs(rest);
    const double d = static_cast<double>(a.size() - 1);
    double max_coeff = 0;
    for (const auto& c : a) max_coeff = std::max(max_coeff, std::abs(c));
    for (std::size_t i = 0; i < z.size(); ++i) {
      auto [p, dp] = horner_with_derivative(a, z[i]);
      double mag = 0, zp = 1;
      for (const auto& c : a) {
        mag += std::abs(c) * zp;
        zp *= std::abs(z[i]);
      }
      double eval_err = 2.0 * d * kEps * mag;
      cplx prod = a.back();
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) prod *= (z[i] - z[j]);
      RootDatum r;
      r.approx = z[i];
      r.modulus = std::abs(z[i]);
      r.residual = std::abs(p);
      r.radius = std::max(d * (std::abs(p) + eval_err) / std::abs(prod), 4 * kEps * r.modulus);
      out.push_back(std::move(r));
    }
    break;
  }
  for (auto& r : out) {
    r.squarefree_factor = f;
    if (r.exact) r.residual = 0.0;
  }
  return out;
}

std::vector<RootDatum> find_roots(const CanonicalPoly& a, std::size_t degree_k) {
  std::vector<RootDatum> out;
  for (const auto& [factor, mult] : squarefree_decomposition(a))
    for (auto& r : squarefree_roots(factor)) {
      r.multiplicity = mult;
      r.degree_k = degree_k;
      out.push_back(std::move(r));
    }
  return out;
}

namespace detail {

LaurentPoly characteristic_polynomial(Matrix<Rational> h) {
  const std::size_t n = h.rows();
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && sgn(h(i, m - 1)) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      h.swap_rows(i, m);
      h.swap_cols(i, m);
    }
    Rational t = h(m, m - 1);
    for (std::size_t r = m + 1; r < n; ++r) {
      if (sgn(h(r, m - 1)) == 0) continue;
      Rational u = h(r, m - 1) / t;
      for (std::size_t c = 0; c < n; ++c) h(r, c) -= u * h(m, c);
      for (std::size_t c = 0; c < n; ++c) h(c, m) += u * h(c, r);
    }
  }
  std::vector<LaurentPoly> p(n + 1);
  p[0] = LaurentPoly(1);
  const LaurentPoly x = LaurentPoly::t();
  for (std::size_t m = 1; m <= n; ++m) {
    p[m] = (x - LaurentPoly(h(m - 1, m - 1))) * p[m - 1];
    Rational t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t *= h(m - i, m - i - 1);
      if (sgn(t) == 0) break;
      p[m] -= p[m - i - 1] * Rational(t * h(m - i - 1, m - 1));
    }
  }
  return p[n];
}

LaurentPoly product_root_polynomial(const CanonicalPoly& f) {
  const std::size_t d = static_cast<std::size_t>(f.degree());
  Matrix<Rational> c(d, d, Rational(0));
  for (std::size_t i = 1; i < d; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = -f.poly().coeff(static_cast<int>(i));
  // Eigenvalues of C ⊗ C are the products λ_i λ_j.
  Matrix<Rational> k(d * d, d * d, Rational(0));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      if (sgn(c(a, b)) == 0) continue;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) k(a * d + i, b * d + j) = c(a, b) * c(i, j);
    }
  return characteristic_polynomial(std::move(k));
}

LaurentPoly squarefree_part(const LaurentPoly& f) {
  const LaurentPoly g = canonicalize(f).poly();
  return exact_div(g, gcd(g, g.derivative()).poly());
}

namespace {

// Ordinary polynomial remainder; both arguments have no negative powers.
// (Laurent divmod would reduce modulo units and lose the degree order.)
LaurentPoly poly_rem(LaurentPoly p, const LaurentPoly& q) {
  while (!p.is_zero() && p.highest() >= q.highest())
    p -= q.shifted(p.highest() - q.highest()) * (p.leading() / q.leading());
  return p;
}

std::vector<LaurentPoly> sturm_sequence(const LaurentPoly& f) {
  std::vector<LaurentPoly> seq{f, f.derivative()};
  while (!seq.back().is_zero() && seq.back().highest() > 0) {
    LaurentPoly r = poly_rem(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

std::size_t sign_changes(const std::vector<LaurentPoly>& seq, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = sgn(p.evaluate(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t count_real_roots(const LaurentPoly& f, const Rational& lo, const Rational& hi) {
  if (hi < lo) return 0;
  LaurentPoly g = canonicalize(f).poly();
  if (g.span() == 0) return 0;
  auto seq = sturm_sequence(g);
  // Sturm counts roots in (lo, hi]; add lo itself separately.
  std::size_t n = sign_changes(seq, lo) - sign_changes(seq, hi);
  if (sgn(g.evaluate(lo)) == 0) ++n;
  return n;
}

}  // namespace detail

namespace {

enum class Relation { Equal, Distinct, Unknown };

struct SquaredModulusInterval {
  Rational lo, hi;
};

SquaredModulusInterval squared_interval(const RootDatum& r) {
  if (r.exact) {
    Rational v = *r.exact * *r.exact;
    return {v, v};
  }
  long double m = r.modulus, rad = r.radius;
  long double lo = std::max(0.0L, m - rad), hi = m + rad;
  double lo2 = static_cast<double>(lo * lo * (1.0L - 1e-12L));
  double hi2 = static_cast<double>(hi * hi * (1.0L + 1e-12L));
  return {Rational(lo2), Rational(hi2)};
}

class ModulusComparator {
 public:
  Relation compare(const RootDatum& x, const RootDatum& y) {
    if (x.exact && y.exact) return abs(*x.exact) == abs(*y.exact) ? Relation::Equal : Relation::Distinct;
    auto ix = squared_interval(x), iy = squared_interval(y);
    Rational inter_lo = std::max(ix.lo, iy.lo), inter_hi = std::min(ix.hi, iy.hi);
    if (inter_hi < inter_lo) return Relation::Distinct;
    LaurentPoly p = detail::squarefree_part(moduli_poly(x) * moduli_poly(y));
    if (detail::count_real_roots(p, inter_lo, inter_hi) == 0) return Relation::Distinct;
    if (detail::count_real_roots(p, std::min(ix.lo, iy.lo), std::max(ix.hi, iy.hi)) == 1) return Relation::Equal;
    return Relation::Unknown;
  }

 private:
  const LaurentPoly& moduli_poly(const RootDatum& r) {
    std::string key = r.exact ? "exact:" + to_string(*r.exact) : r.squarefree_factor.to_string();
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    LaurentPoly q = r.exact ? LaurentPoly(0, {Rational(-(*r.exact) * (*r.exact)), Rational(1)})
                            : detail::product_root_polynomial(r.squarefree_factor);
    return cache_.emplace(key, std::move(q)).first->second;
  }

  std::map<std::string, LaurentPoly> cache_;
};

std::string describe(const RootDatum& r) {
  if (r.exact) return to_string(*r.exact);
  return "(" + std::to_string(r.approx.real()) + ", " + std::to_string(r.approx.imag()) + ") of " +
         r.squarefree_factor.to_string();
}

}  // namespace

ExceptionalSet exceptional_weights(const std::vector<RootDatum>& roots) {
  std::vector<const RootDatum*> order;
  for (const auto& r : roots) order.push_back(&r);
  std::stable_sort(order.begin(), order.end(), [](const RootDatum* a, const RootDatum* b) {
    if (a->exact && b->exact) return abs(*a->exact) < abs(*b->exact);
    return a->log_modulus() < b->log_modulus();
  });

  ModulusComparator cmp;
  std::vector<std::vector<const RootDatum*>> groups;
  for (const RootDatum* r : order) {
    bool equal = false, distinct = false;
    if (!groups.empty())
      for (const RootDatum* y : groups.back()) {
        switch (cmp.compare(*r, *y)) {
          case Relation::Equal: equal = true; break;
          case Relation::Distinct: distinct = true; break;
          case Relation::Unknown:
            throw AmbiguousWall("cannot certify whether roots " + describe(*r) + " and " + describe(*y) +
                                " have equal modulus");
        }
      }
    if (equal && distinct)
      throw AmbiguousWall("inconsistent modulus certification around root " + describe(*r));
    if (equal)
      groups.back().push_back(r);
    else
      groups.push_back({r});
  }

  ExceptionalSet out;
  for (const auto& g : groups) {
    Wall w;
    const RootDatum* best = g.front();
    for (const RootDatum* r : g) {
      if (r->exact && !w.exact_modulus) w.exact_modulus = Rational(abs(*r->exact));
      if (r->log_radius() < best->log_radius()) best = r;
      w.contributions.push_back({r->degree_k, *r});
      w.jump += w.contributions.back().signed_count();
    }
    w.delta = best->log_modulus();
    for (const RootDatum* r : g) w.radius = std::max(w.radius, r->log_radius());
    if (w.exact_modulus) w.radius = 0.0;
    std::stable_sort(w.contributions.begin(), w.contributions.end(),
                     [](const Contribution& a, const Contribution& b) { return a.k < b.k; });
    out.walls.push_back(std::move(w));
  }
  return out;
}

ExceptionalSet exceptional_weights(const AlexanderData& alex, int n) {
  std::vector<RootDatum> roots;
  for (int k = 0; k < n; ++k)
    for (auto& r : find_roots(alex.get(static_cast<std::size_t>(k)), static_cast<std::size_t>(k)))
      roots.push_back(std::move(r));
  return exceptional_weights(roots);
}

}  // namespace endindex
