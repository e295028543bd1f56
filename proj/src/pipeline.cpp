#include "endindex/pipeline.hpp"

#include <sstream>

namespace endindex {

namespace {

ChainComplex build_complex(const AnalysisInput& in) {
  switch (in.kind) {
    case InputKind::Complex: return *in.complex;
    case InputKind::Simplicial: return lift_simplicial(*in.simplicial);
    case InputKind::Alexander: {
      std::vector<std::vector<LaurentPoly>> factors;
      for (const auto& p : in.polynomials) factors.push_back({p});
      return realize_torsion_complex(factors);
    }
  }
  throw UnsupportedInput("unknown input kind");
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

}  // namespace

Analysis analyze_alexander(const AnalysisInput& in) {
  Analysis a;
  a.kind = in.kind;
  a.simplicial = in.simplicial;
  a.complex = build_complex(in);
  a.homology = homology(a.complex);
  a.finiteness = finiteness_check(a.homology);
  a.euler = euler_characteristic_X(a.complex);
  if (a.euler.warning) a.notices.push_back(*a.euler.warning);
  if (!a.finiteness.finite) throw NotFinite(a.finiteness.infinite_degrees);
  a.alexander = alexander_polynomials(a.homology);
  return a;
}

Analysis analyze(const AnalysisInput& in) {
  Analysis a = analyze_alexander(in);

  int n = static_cast<int>(a.complex.top_degree());
  if (in.dim) {
    n = *in.dim;
  } else {
    a.notices.push_back("manifold dimension not given; using the top chain degree n = " + std::to_string(n));
  }
  a.wall_degrees = n;
  a.walls = exceptional_weights(a.alexander, n);

  if (in.chi) {
    a.context = ManifoldContext{n, *in.chi};
    a.index = index_function(a.alexander, *a.context, a.walls);
    for (const auto& d : a.index->discrepancies()) a.notices.push_back("index discrepancy: " + d);
    a.duality = duality_check(a.alexander, n, &*a.index);

    const auto& s = a.index->samples;
    a.excision.push_back(excision_index(*a.index, a.alexander, s.front(), s.front()));
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      a.excision.push_back(excision_index(*a.index, a.alexander, s[i + 1], s[i]));
      a.excision.push_back(excision_index(*a.index, a.alexander, s[i], s[i + 1]));
    }
    for (const auto& x : a.excision)
      if (!x.agree())
        a.notices.push_back("excision paths disagree at (" + fmt(x.delta1) + ", " + fmt(x.delta2) + ")");
  } else {
    a.notices.push_back("chi(M) not given; index section omitted");
    a.duality = duality_check(a.alexander, n, nullptr);
  }
  if (a.duality && !a.duality->pass())
    a.notices.push_back("duality check failed (expected only for inputs that do not come from a manifold)");

  if (a.simplicial) a.cup = cup_product_check(*a.simplicial);
  return a;
}

Json homology_json(const HomologyModule& h) {
  Json out = Json::array();
  for (std::size_t k = 0; k < h.degrees.size(); ++k) {
    Json factors = Json::array();
    for (const auto& q : h.degrees[k].invariant_factors) factors.push_back(q.to_string());
    out.push_back({{"degree", k},
                   {"free_rank", h.degrees[k].free_rank},
                   {"invariant_factors", factors},
                   {"torsion_dimension", h.degrees[k].torsion_dimension()}});
  }
  return out;
}

Json alexander_json(const AlexanderData& a) {
  Json out = Json::array();
  for (std::size_t k = 0; k < a.polys.size(); ++k)
    out.push_back({{"degree", k}, {"polynomial", a.polys[k].to_string()}, {"coeffs", to_json(a.polys[k].poly())}});
  return out;
}

namespace {

Json root_json(const RootDatum& r) {
  Json j = {{"re", r.approx.real()},
            {"im", r.approx.imag()},
            {"modulus", r.modulus},
            {"radius", r.radius},
            {"multiplicity", r.multiplicity},
            {"factor", r.squarefree_factor.to_string()}};
  j["exact"] = r.exact ? Json(to_string(*r.exact)) : Json(nullptr);
  return j;
}

}  // namespace

Json walls_json(const ExceptionalSet& walls) {
  Json out = Json::array();
  for (const auto& w : walls.walls) {
    Json cs = Json::array();
    for (const auto& c : w.contributions)
      cs.push_back({{"k", c.k}, {"root", root_json(c.root)}, {"signed_count", c.signed_count()}});
    Json j = {{"delta", w.delta}, {"radius", w.radius}, {"jump", w.jump}, {"contributions", cs}};
    auto exact = w.delta_exact();
    j["delta_exact"] = exact ? Json(*exact) : Json(nullptr);
    out.push_back(j);
  }
  return out;
}

Json index_json(const IndexFunction& f) {
  Json walls = Json::array();
  for (const auto& w : f.walls) walls.push_back(w.delta);
  return {{"n", f.n},
          {"chi", f.chi},
          {"walls", walls},
          {"values", f.values},
          {"accumulated", f.accumulated},
          {"samples", f.samples},
          {"consistent", f.consistent()},
          {"discrepancies", f.discrepancies()}};
}

Json duality_json(const DualityReport& d) {
  Json pairs = Json::array();
  for (const auto& p : d.pairs)
    pairs.push_back({{"k", p.k}, {"partner", p.partner}, {"A_k", p.lhs}, {"reversed_partner", p.rhs}, {"pass", p.pass}});
  Json parity = Json::array();
  for (const auto& s : d.parity)
    parity.push_back({{"delta", s.delta}, {"value", s.value}, {"mirrored", s.mirrored}, {"pass", s.pass}});
  return {{"pairs", pairs}, {"parity", parity}, {"pass", d.pass()}};
}

Json excision_json(const std::vector<ExcisionResult>& xs) {
  Json out = Json::array();
  for (const auto& x : xs)
    out.push_back({{"delta1", x.delta1},
                   {"delta2", x.delta2},
                   {"via_index", x.via_index},
                   {"via_lemma", x.via_lemma},
                   {"agree", x.agree()}});
  return out;
}

Json cup_json(const CupCheck& c) {
  return {{"betti", c.betti},
          {"cup_ranks", c.cup_ranks},
          {"defects", c.defects},
          {"descends", c.descends},
          {"exact", c.exact}};
}

Json fiber_json(const TwistedFiber& f) {
  Json j = {{"z", {f.z.real(), f.z.imag()}}, {"dims", f.dims}, {"euler_characteristic", f.euler_characteristic()}};
  j["exact_z"] = f.exact_z ? Json(to_string(*f.exact_z)) : Json(nullptr);
  return j;
}

Json fredholm_json(const FredholmVerdict& v) {
  Json failing = Json::array();
  for (const auto& z : v.failing_samples) failing.push_back({z.real(), z.imag()});
  return {{"delta", v.delta},
          {"symbolic", v.symbolic},
          {"numeric", v.numeric},
          {"agree", v.agree()},
          {"reason", v.reason},
          {"failing_samples", failing}};
}

Json report_json(const Analysis& a) {
  Json r;
  r["input"] = to_string(a.kind);
  r["complex"] = to_json(a.complex);
  if (a.simplicial) r["simplicial"] = to_json(*a.simplicial);
  r["homology"] = homology_json(a.homology);
  r["finite"] = a.finiteness.finite;
  r["euler_characteristic_X"] = a.euler.value;
  r["alexander"] = alexander_json(a.alexander);
  r["wall_degrees"] = a.wall_degrees;
  r["walls"] = walls_json(a.walls);
  r["index"] = a.index ? index_json(*a.index) : Json(nullptr);
  r["duality"] = a.duality ? duality_json(*a.duality) : Json(nullptr);
  r["excision_samples"] = excision_json(a.excision);
  r["cup_check"] = a.cup ? cup_json(*a.cup) : Json(nullptr);
  r["notices"] = a.notices;
  return r;
}

std::string report_text(const Analysis& a) {
  std::ostringstream out;
  out << "input: " << to_string(a.kind) << ", chain ranks [";
  for (std::size_t k = 0; k < a.complex.size(); ++k) out << (k ? ", " : "") << a.complex.rank(k);
  out << "]\n\nhomology:\n";
  for (std::size_t k = 0; k < a.homology.degrees.size(); ++k) {
    const auto& d = a.homology.degrees[k];
    out << "  H_" << k << ": free rank " << d.free_rank;
    for (const auto& q : d.invariant_factors) out << ", Λ/(" << q.to_string() << ")";
    out << "\n";
  }
  out << "\nAlexander polynomials:\n";
  for (std::size_t k = 0; k < a.alexander.polys.size(); ++k)
    out << "  A_" << k << " = " << a.alexander.polys[k].to_string() << "\n";
  out << "\nwalls (degrees 0.." << a.wall_degrees - 1 << "):\n";
  if (a.walls.walls.empty()) out << "  none\n";
  for (const auto& w : a.walls.walls) {
    out << "  delta = " << fmt(w.delta);
    if (auto e = w.delta_exact()) out << " = " << *e;
    out << ", jump " << w.jump << "\n";
  }
  if (a.index) {
    out << "\nindex (n = " << a.index->n << ", chi = " << a.index->chi << "): [";
    for (std::size_t i = 0; i < a.index->values.size(); ++i) out << (i ? ", " : "") << a.index->values[i];
    out << "]" << (a.index->consistent() ? "" : " (jump accumulation disagrees)") << "\n";
  }
  if (a.duality) {
    out << "\nduality:";
    for (const auto& p : a.duality->pairs)
      out << " (A_" << p.k << ", A_" << p.partner << ") " << (p.pass ? "ok" : "FAIL") << ";";
    if (!a.duality->parity.empty()) out << " parity " << (a.duality->parity_pass() ? "ok" : "FAIL");
    out << "\n";
  }
  if (a.cup) {
    out << "\ncup product with xi: " << (a.cup->exact ? "exact" : "not exact") << ", defects [";
    for (std::size_t k = 0; k < a.cup->defects.size(); ++k) out << (k ? ", " : "") << a.cup->defects[k];
    out << "]\n";
  }
  for (const auto& n : a.notices) out << "\nnote: " << n;
  if (!a.notices.empty()) out << "\n";
  return out.str();
}

}  // namespace endindex
