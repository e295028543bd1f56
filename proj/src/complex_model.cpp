#include "endindex/complex_model.hpp"

#include <algorithm>
#include <set>

namespace endindex {

ChainComplex::ChainComplex(std::vector<std::size_t> ranks, std::vector<LaurentMatrix> boundaries)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
  const std::size_t expected = ranks_.empty() ? 0 : ranks_.size() - 1;
  if (boundaries_.size() != expected)
    throw InvalidComplex("expected " + std::to_string(expected) + " boundary matrices, got " +
                         std::to_string(boundaries_.size()));
  for (std::size_t k = 1; k <= boundaries_.size(); ++k) {
    const auto& d = boundaries_[k - 1];
    if (d.rows() != ranks_[k - 1] || d.cols() != ranks_[k])
      throw InvalidComplex("boundary d_" + std::to_string(k) + " has shape " + std::to_string(d.rows()) +
                           "x" + std::to_string(d.cols()) + ", expected " + std::to_string(ranks_[k - 1]) +
                           "x" + std::to_string(ranks_[k]));
  }
  for (std::size_t k = 1; k < boundaries_.size(); ++k) {
    LaurentMatrix dd = boundaries_[k - 1] * boundaries_[k];
    for (std::size_t i = 0; i < dd.rows(); ++i)
      for (std::size_t j = 0; j < dd.cols(); ++j)
        if (!dd(i, j).is_zero())
          throw InvalidComplex("d_" + std::to_string(k) + " d_" + std::to_string(k + 1) +
                               " != 0 at entry (" + std::to_string(i) + ", " + std::to_string(j) +
                               "): " + dd(i, j).to_string());
  }
}

LaurentMatrix ChainComplex::boundary(std::size_t k) const {
  if (k >= 1 && k <= boundaries_.size()) return boundaries_[k - 1];
  return LaurentMatrix(k == 0 ? 0 : rank(k - 1), rank(k));
}

std::size_t SimplicialInput::dimension() const {
  std::size_t d = 0;
  for (std::size_t i = 1; i < simplices.size(); ++i)
    if (!simplices[i].empty()) d = i;
  return d;
}

std::vector<std::vector<std::size_t>> SimplicialInput::cells(std::size_t d) const {
  if (d == 0) {
    std::vector<std::vector<std::size_t>> v;
    for (std::size_t i = 0; i < vertices; ++i) v.push_back({i});
    return v;
  }
  return d < simplices.size() ? simplices[d] : std::vector<std::vector<std::size_t>>{};
}

long long SimplicialInput::cocycle_value(std::size_t u, std::size_t v) const {
  if (u == v) return 0;
  auto it = cocycle.find({std::min(u, v), std::max(u, v)});
  if (it == cocycle.end())
    throw InvalidComplex("missing cocycle value on edge " + std::to_string(std::min(u, v)) + "," +
                         std::to_string(std::max(u, v)));
  return u < v ? it->second : -it->second;
}

namespace {

std::string tuple_str(const std::vector<std::size_t>& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "]";
}

std::vector<std::size_t> drop(const std::vector<std::size_t>& s, std::size_t i) {
  std::vector<std::size_t> f;
  for (std::size_t j = 0; j < s.size(); ++j)
    if (j != i) f.push_back(s[j]);
  return f;
}

}  // namespace

void validate(const SimplicialInput& x) {
  std::vector<std::set<std::vector<std::size_t>>> seen(x.dimension() + 1);
  for (std::size_t d = 0; d <= x.dimension(); ++d) {
    for (const auto& s : x.cells(d)) {
      if (s.size() != d + 1)
        throw InvalidComplex("simplex " + tuple_str(s) + " listed in dimension " + std::to_string(d));
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= x.vertices) throw InvalidComplex("vertex out of range in " + tuple_str(s));
        if (i && s[i - 1] >= s[i]) throw InvalidComplex("simplex " + tuple_str(s) + " is not strictly increasing");
      }
      if (!seen[d].insert(s).second) throw InvalidComplex("duplicate simplex " + tuple_str(s));
      if (d >= 2)
        for (std::size_t i = 0; i <= d; ++i)
          if (!seen[d - 1].count(drop(s, i)))
            throw InvalidComplex("face " + tuple_str(drop(s, i)) + " of " + tuple_str(s) + " is missing");
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : x.cells(1)) {
    if (!x.cocycle.count({e[0], e[1]})) throw InvalidComplex("missing cocycle value on edge " + tuple_str(e));
    edges.insert({e[0], e[1]});
  }
  for (const auto& [edge, value] : x.cocycle)
    if (!edges.count(edge))
      throw InvalidComplex("cocycle given on " + std::to_string(edge.first) + "," + std::to_string(edge.second) +
                           ", which is not an edge");
  for (const auto& s : x.cells(2)) {
    long long defect = x.cocycle_value(s[0], s[1]) + x.cocycle_value(s[1], s[2]) - x.cocycle_value(s[0], s[2]);
    if (defect != 0)
      throw InvalidComplex("cocycle condition fails on " + tuple_str(s) + " (defect " + std::to_string(defect) + ")");
  }
}

ChainComplex lift_simplicial(const SimplicialInput& x) {
  validate(x);
  const std::size_t n = x.vertices == 0 ? 0 : x.dimension();
  if (x.vertices == 0) return {};
  std::vector<std::size_t> ranks;
  std::vector<LaurentMatrix> boundaries;
  std::map<std::vector<std::size_t>, std::size_t> prev_index;
  for (std::size_t d = 0; d <= n; ++d) {
    auto cells = x.cells(d);
    ranks.push_back(cells.size());
    if (d > 0) {
      LaurentMatrix b(ranks[d - 1], cells.size());
      for (std::size_t j = 0; j < cells.size(); ++j) {
        const auto& s = cells[j];
        for (std::size_t i = 0; i <= d; ++i) {
          // Reference vertex of face i is s[1] for i == 0, else s[0].
          int level = i == 0 ? static_cast<int>(x.cocycle_value(s[0], s[1])) : 0;
          Rational sign = i % 2 == 0 ? 1 : -1;
          b(prev_index.at(drop(s, i)), j) += LaurentPoly::monomial(sign, level);
        }
      }
      boundaries.push_back(std::move(b));
    }
    prev_index.clear();
    for (std::size_t j = 0; j < cells.size(); ++j) prev_index[cells[j]] = j;
  }
  return {std::move(ranks), std::move(boundaries)};
}

EulerCharacteristic euler_characteristic_X(const ChainComplex& cc) {
  EulerCharacteristic e;
  for (std::size_t k = 0; k < cc.size(); ++k)
    e.value += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(cc.rank(k));
  if (e.value != 0)
    e.warning = "chi(X) = " + std::to_string(e.value) +
                " is nonzero, so the homology of the end-periodic manifold cannot be finite dimensional";
  return e;
}

ChainComplex realize_torsion_complex(const std::vector<std::vector<LaurentPoly>>& factors_by_degree) {
  const std::size_t top = factors_by_degree.size();
  auto count = [&](std::size_t k) { return k < top ? factors_by_degree[k].size() : std::size_t{0}; };
  // C_k = (fillers for degree k-1 factors) ++ (generators for degree k factors).
  std::vector<std::size_t> ranks(top + 1);
  for (std::size_t k = 0; k <= top; ++k) ranks[k] = count(k) + (k ? count(k - 1) : 0);
  std::vector<LaurentMatrix> boundaries;
  for (std::size_t k = 1; k <= top; ++k) {
    LaurentMatrix b(ranks[k - 1], ranks[k]);
    const std::size_t gen_offset = k >= 2 ? count(k - 2) : 0;
    for (std::size_t i = 0; i < count(k - 1); ++i) b(gen_offset + i, i) = factors_by_degree[k - 1][i];
    boundaries.push_back(std::move(b));
  }
  return {std::move(ranks), std::move(boundaries)};
}

}  // namespace endindex
