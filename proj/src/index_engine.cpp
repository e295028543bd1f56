#include "endindex/index_engine.hpp"

#include <algorithm>
#include <cmath>

#include "endindex/twisted_l2.hpp"

namespace endindex {

namespace {

long long sign_pow(long long k) { return (k % 2 == 0) ? 1 : -1; }

std::vector<std::vector<RootDatum>> roots_by_degree(const AlexanderData& alex, int n) {
  std::vector<std::vector<RootDatum>> out;
  for (int k = 0; k < n; ++k) out.push_back(find_roots(alex.get(static_cast<std::size_t>(k)), k));
  return out;
}

long long count_formula(const std::vector<std::vector<RootDatum>>& roots, int n, long long chi,
                        double delta) {
  long long v = sign_pow(n) * chi;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    long long above = 0;
    for (const auto& r : roots[k])
      if (r.log_modulus() > delta) above += r.multiplicity;
    v += sign_pow(static_cast<long long>(k)) * above;
  }
  return v;
}

std::vector<double> interval_samples(const std::vector<Wall>& walls) {
  if (walls.empty()) return {0.0};
  std::vector<double> s;
  s.push_back(walls.front().delta - 1.0);
  for (std::size_t i = 0; i + 1 < walls.size(); ++i) s.push_back(0.5 * (walls[i].delta + walls[i + 1].delta));
  s.push_back(walls.back().delta + 1.0);
  return s;
}

const Wall* wall_hit(const std::vector<Wall>& walls, double delta) {
  for (const auto& w : walls)
    if (std::abs(delta - w.delta) <= w.radius + 1e-12 * std::max(1.0, std::abs(delta))) return &w;
  return nullptr;
}

}  // namespace

std::vector<std::string> IndexFunction::discrepancies() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < values.size() && i < accumulated.size(); ++i)
    if (values[i] != accumulated[i])
      out.push_back("interval " + std::to_string(i) + ": closed formula " + std::to_string(values[i]) +
                    ", jump accumulation " + std::to_string(accumulated[i]));
  return out;
}

long long closed_formula(const AlexanderData& alex, const ManifoldContext& ctx, double delta) {
  return count_formula(roots_by_degree(alex, ctx.dim), ctx.dim, ctx.chi, delta);
}

IndexFunction index_function(const AlexanderData& alex, const ManifoldContext& ctx,
                             const ExceptionalSet& walls) {
  IndexFunction f;
  f.n = ctx.dim;
  f.chi = ctx.chi;
  f.walls = walls.walls;
  f.samples = interval_samples(f.walls);

  auto roots = roots_by_degree(alex, ctx.dim);
  for (double d : f.samples) f.values.push_back(count_formula(roots, ctx.dim, ctx.chi, d));

  f.accumulated.assign(f.walls.size() + 1, 0);
  f.accumulated.back() = sign_pow(ctx.dim) * ctx.chi;
  for (std::size_t i = f.walls.size(); i-- > 0;) f.accumulated[i] = f.accumulated[i + 1] - f.walls[i].jump;
  return f;
}

long long index_at(const IndexFunction& f, double delta) {
  if (const Wall* w = wall_hit(f.walls, delta)) throw OnWall(delta, w->delta);
  std::size_t i = 0;
  while (i < f.walls.size() && f.walls[i].delta < delta) ++i;
  return f.values.at(i);
}

JumpBreakdown jump_at(const IndexFunction& f, std::size_t wall_index) {
  if (wall_index >= f.walls.size())
    throw DomainError("wall index " + std::to_string(wall_index) + " out of range (" +
                      std::to_string(f.walls.size()) + " walls)");
  JumpBreakdown b;
  for (const auto& c : f.walls[wall_index].contributions) {
    b.per_degree.emplace_back(c.k, c.signed_count());
    b.jump += c.signed_count();
  }
  return b;
}

ExcisionResult excision_index(const IndexFunction& f, const AlexanderData& alex, double delta1,
                              double delta2) {
  ExcisionResult r;
  r.delta1 = delta1;
  r.delta2 = delta2;
  r.via_index = index_at(f, delta2) - index_at(f, delta1);
  if (delta1 == delta2) return r;

  // The annulus lemma is stated for δ2 < δ1; the other order follows by antisymmetry.
  const double hi = std::max(delta1, delta2), lo = std::min(delta1, delta2);
  long long sum = 0;
  auto roots = roots_by_degree(alex, f.n);
  for (std::size_t k = 0; k < roots.size(); ++k)
    for (const auto& root : roots[k]) {
      long long hom = 0;
      if (root.exact)
        hom = static_cast<long long>(
            l2_hom_dim_analytic(std::complex<double>(to_double(*root.exact), 0.0), root.multiplicity, hi, lo));
      else
        hom = static_cast<long long>(l2_hom_dim_analytic(root.approx, root.multiplicity, hi, lo));
      sum += sign_pow(static_cast<long long>(k)) * hom;
    }
  r.via_lemma = delta2 < delta1 ? sum : -sum;
  return r;
}

bool DualityReport::roots_pass() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const DualityPair& p) { return p.pass; });
}

bool DualityReport::parity_pass() const {
  return std::all_of(parity.begin(), parity.end(), [](const ParitySample& p) { return p.pass; });
}

DualityReport duality_check(const AlexanderData& alex, int n, const IndexFunction* f) {
  DualityReport rep;
  for (int k = 0; k < n; ++k) {
    int partner = n - 1 - k;
    if (partner < k) break;
    DualityPair p;
    p.k = static_cast<std::size_t>(k);
    p.partner = static_cast<std::size_t>(partner);
    CanonicalPoly a = alex.get(p.k);
    CanonicalPoly b = reversal(alex.get(p.partner));
    p.lhs = a.to_string();
    p.rhs = b.to_string();
    p.pass = a == b;
    rep.pairs.push_back(std::move(p));
  }
  if (!f) return rep;

  double outer = 0.0;
  for (const auto& w : f->walls) outer = std::max(outer, std::abs(w.delta));
  const double span = outer + 1.0;
  const long long parity = sign_pow(n);
  for (int j = 0; j < 10; ++j) {
    double d = span * (j + 0.318) / 10.0;
    // Step away from walls (and their mirrors) deterministically.
    for (int tries = 0; tries < 64 && (wall_hit(f->walls, d) || wall_hit(f->walls, -d)); ++tries)
      d += span * 0.0137;
    ParitySample s;
    s.delta = d;
    s.value = index_at(*f, d);
    s.mirrored = index_at(*f, -d);
    s.pass = s.mirrored == parity * s.value;
    rep.parity.push_back(s);
  }
  return rep;
}

}  // namespace endindex
