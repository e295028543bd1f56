#include "endindex/homology.hpp"

namespace endindex {

std::size_t HomologyDegree::torsion_dimension() const {
  std::size_t d = 0;
  for (const auto& q : invariant_factors) d += static_cast<std::size_t>(q.degree());
  return d;
}

HomologyModule HomologyModule::torsion(const std::vector<std::vector<LaurentPoly>>& factors_by_degree) {
  HomologyModule h;
  for (const auto& fs : factors_by_degree) {
    // Diagonal presentation matrix; its Smith form is the invariant-factor chain.
    LaurentMatrix pres(fs.size(), fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) pres(i, i) = fs[i];
    HomologyDegree deg;
    for (auto& q : smith_normal_form(pres).diag)
      if (!q.is_one()) deg.invariant_factors.push_back(q);
    deg.free_rank = fs.size() - rank_ff(pres);
    h.degrees.push_back(std::move(deg));
  }
  return h;
}

HomologyModule homology(const ChainComplex& cc) {
  HomologyModule h;
  for (std::size_t k = 0; k < cc.size(); ++k) {
    const std::size_t ck = cc.rank(k);
    SnfResult outgoing = smith_normal_form(cc.boundary(k));
    const std::size_t r = outgoing.rank;
    // Columns r.. of `right` span ker d_k; right_inverse gives coordinates.
    LaurentMatrix coords = outgoing.right_inverse * cc.boundary(k + 1);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < coords.cols(); ++j)
        if (!coords(i, j).is_zero())
          throw InvalidComplex("image of d_" + std::to_string(k + 1) + " is not contained in ker d_" +
                               std::to_string(k));
    LaurentMatrix incoming = coords.row_block(r, ck);
    SnfResult rel = smith_normal_form(incoming);
    HomologyDegree deg;
    deg.free_rank = (ck - r) - rel.rank;
    for (const auto& q : rel.diag)
      if (!q.is_one()) deg.invariant_factors.push_back(q);
    h.degrees.push_back(std::move(deg));
  }
  return h;
}

Finiteness finiteness_check(const HomologyModule& h) {
  Finiteness f;
  for (std::size_t k = 0; k < h.degrees.size(); ++k)
    if (h.degrees[k].free_rank > 0) f.infinite_degrees.push_back(k);
  f.finite = f.infinite_degrees.empty();
  return f;
}

const CanonicalPoly& AlexanderData::at(std::size_t k) const { return polys.at(k); }

CanonicalPoly AlexanderData::product(std::size_t n) const {
  CanonicalPoly p;
  for (std::size_t k = 0; k < n; ++k) p = p * get(k);
  return p;
}

AlexanderData alexander_polynomials(const HomologyModule& h) {
  auto f = finiteness_check(h);
  if (!f.finite) throw NotFinite(f.infinite_degrees);
  AlexanderData a;
  for (const auto& deg : h.degrees) {
    CanonicalPoly p;
    for (const auto& q : deg.invariant_factors) p = p * q;
    a.polys.push_back(p);
  }
  return a;
}

}  // namespace endindex
