#include "endindex/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace endindex {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema(where, std::string("missing field '") + key + "'");
  return *it;
}

std::size_t as_count(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) schema(where, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

std::string rational_text(const Json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  schema(where, "expected a rational as \"p/q\" or an integer");
}

}  // namespace

Json to_json(const LaurentPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return {{"lowest", p.is_zero() ? 0 : p.lowest()}, {"coeffs", coeffs}};
}

LaurentPoly laurent_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_laurent(j.get<std::string>());
    if (j.is_number_integer()) return LaurentPoly(Rational(j.get<long>()));
    if (!j.is_object()) schema(where, "expected a polynomial string or {\"lowest\", \"coeffs\"}");
    const Json& low = field(j, "lowest", where);
    if (!low.is_number_integer()) schema(where + ".lowest", "expected an integer");
    const Json& cs = field(j, "coeffs", where);
    if (!cs.is_array()) schema(where + ".coeffs", "expected an array");
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < cs.size(); ++i)
      coeffs.push_back(parse_rational(rational_text(cs[i], where + ".coeffs[" + std::to_string(i) + "]")));
    return LaurentPoly(low.get<int>(), std::move(coeffs));
  } catch (const ParseError& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

Json to_json(const LaurentMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

LaurentMatrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) schema(where, "expected {\"rows\", \"cols\", \"entries\"}");
  std::size_t r = as_count(field(j, "rows", where), where + ".rows");
  std::size_t c = as_count(field(j, "cols", where), where + ".cols");
  const Json& e = field(j, "entries", where);
  if (!e.is_array() || e.size() != r) schema(where + ".entries", "expected " + std::to_string(r) + " rows");
  LaurentMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    std::string wi = where + ".entries[" + std::to_string(i) + "]";
    if (!e[i].is_array() || e[i].size() != c) schema(wi, "expected " + std::to_string(c) + " entries");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = laurent_from_json(e[i][k], wi + "[" + std::to_string(k) + "]");
  }
  return m;
}

Json to_json(const ChainComplex& cc) {
  Json bs = Json::array();
  for (const auto& b : cc.boundaries()) bs.push_back(to_json(b));
  return {{"type", "complex"}, {"ranks", cc.ranks()}, {"boundaries", bs}};
}

Json to_json(const SimplicialInput& x) {
  Json simplices = Json::array();
  for (std::size_t d = 1; d < x.simplices.size(); ++d)
    for (const auto& s : x.simplices[d]) simplices.push_back(s);
  Json cocycle = Json::object();
  for (const auto& [edge, value] : x.cocycle)
    cocycle[std::to_string(edge.first) + "," + std::to_string(edge.second)] = value;
  return {{"type", "simplicial"}, {"vertices", x.vertices}, {"simplices", simplices}, {"cocycle", cocycle}};
}

std::string to_string(InputKind kind) {
  switch (kind) {
    case InputKind::Complex: return "complex";
    case InputKind::Simplicial: return "simplicial";
    case InputKind::Alexander: return "alexander";
  }
  return "unknown";
}

namespace {

ChainComplex complex_from_json(const Json& j) {
  const Json& ranks = field(j, "ranks", "complex");
  if (!ranks.is_array() || ranks.empty()) schema("complex.ranks", "expected a nonempty array");
  std::vector<std::size_t> rs;
  for (std::size_t i = 0; i < ranks.size(); ++i)
    rs.push_back(as_count(ranks[i], "complex.ranks[" + std::to_string(i) + "]"));
  const Json& bs = field(j, "boundaries", "complex");
  if (!bs.is_array()) schema("complex.boundaries", "expected an array");
  std::vector<LaurentMatrix> mats;
  for (std::size_t i = 0; i < bs.size(); ++i)
    mats.push_back(matrix_from_json(bs[i], "complex.boundaries[" + std::to_string(i) + "]"));
  return ChainComplex(std::move(rs), std::move(mats));
}

SimplicialInput simplicial_from_json(const Json& j) {
  SimplicialInput x;
  x.vertices = as_count(field(j, "vertices", "simplicial"), "simplicial.vertices");
  const Json& ss = field(j, "simplices", "simplicial");
  if (!ss.is_array()) schema("simplicial.simplices", "expected an array of vertex tuples");
  x.simplices.resize(1);
  for (std::size_t i = 0; i < ss.size(); ++i) {
    std::string wi = "simplicial.simplices[" + std::to_string(i) + "]";
    if (!ss[i].is_array() || ss[i].empty()) schema(wi, "expected a nonempty vertex tuple");
    std::vector<std::size_t> s;
    for (std::size_t k = 0; k < ss[i].size(); ++k) s.push_back(as_count(ss[i][k], wi));
    const std::size_t d = s.size() - 1;
    if (d == 0) continue;
    if (x.simplices.size() <= d) x.simplices.resize(d + 1);
    x.simplices[d].push_back(std::move(s));
  }
  if (auto it = j.find("cocycle"); it != j.end()) {
    if (!it->is_object()) schema("simplicial.cocycle", "expected an object keyed by \"u,v\"");
    for (const auto& [key, value] : it->items()) {
      std::string wk = "simplicial.cocycle[\"" + key + "\"]";
      auto comma = key.find(',');
      std::size_t u = 0, v = 0;
      try {
        if (comma == std::string::npos) throw std::invalid_argument(key);
        u = std::stoul(key.substr(0, comma));
        v = std::stoul(key.substr(comma + 1));
      } catch (const std::logic_error&) {
        schema(wk, "key must be \"u,v\"");
      }
      if (!value.is_number_integer()) schema(wk, "expected an integer");
      long long c = value.get<long long>();
      if (u > v) {
        std::swap(u, v);
        c = -c;
      }
      x.cocycle[{u, v}] = c;
    }
  }
  validate(x);
  return x;
}

}  // namespace

AnalysisInput input_from_json(const Json& root) {
  if (!root.is_object()) schema("input", "expected a JSON object");
  const Json* doc = &root;
  if (!root.contains("type") && root.contains("complex")) doc = &root["complex"];

  AnalysisInput in;
  if (!doc->contains("type")) schema("input", "missing field 'type' (complex, simplicial or alexander)");
  const Json& type = (*doc)["type"];
  if (!type.is_string()) schema("input.type", "expected a string");
  const std::string t = type.get<std::string>();
  if (t == "complex") {
    in.kind = InputKind::Complex;
    in.complex = complex_from_json(*doc);
  } else if (t == "simplicial") {
    in.kind = InputKind::Simplicial;
    in.simplicial = simplicial_from_json(*doc);
  } else if (t == "alexander") {
    in.kind = InputKind::Alexander;
    const Json& ps = field(*doc, "polynomials", "alexander");
    if (!ps.is_array() || ps.empty()) schema("alexander.polynomials", "expected a nonempty array");
    for (std::size_t i = 0; i < ps.size(); ++i) {
      auto p = laurent_from_json(ps[i], "alexander.polynomials[" + std::to_string(i) + "]");
      if (p.is_zero()) schema("alexander.polynomials[" + std::to_string(i) + "]", "A_k must be nonzero");
      in.polynomials.push_back(std::move(p));
    }
  } else {
    schema("input.type", "unknown input type '" + t + "'");
  }

  const Json* manifold = nullptr;
  if (root.contains("manifold")) manifold = &root["manifold"];
  else if (doc->contains("manifold")) manifold = &(*doc)["manifold"];
  if (manifold && !manifold->is_null()) {
    if (!manifold->is_object()) schema("manifold", "expected {\"dim\", \"chi\"}");
    if (auto it = manifold->find("dim"); it != manifold->end()) {
      if (!it->is_number_integer() || it->get<long long>() < 1) schema("manifold.dim", "expected a positive integer");
      in.dim = it->get<int>();
    }
    if (auto it = manifold->find("chi"); it != manifold->end()) {
      if (!it->is_number_integer()) schema("manifold.chi", "expected an integer");
      in.chi = it->get<long long>();
    }
  }
  return in;
}

Json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw Error("cannot open input file '" + path + "'");
    buf << f.rdbuf();
  }
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

AnalysisInput load_input(const std::string& path) { return input_from_json(read_json(path)); }

}  // namespace endindex
