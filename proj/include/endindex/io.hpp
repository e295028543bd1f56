#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "endindex/complex_model.hpp"
#include "endindex/homology.hpp"

namespace endindex {

using Json = nlohmann::json;

/// {"lowest": e, "coeffs": ["p/q", ...]} with coeffs[i] the coefficient of t^{e+i}.
Json to_json(const LaurentPoly& p);
/// Accepts the object form or a polynomial string such as "t^2 - 3/2*t + t^-1".
LaurentPoly laurent_from_json(const Json& j, const std::string& where);

/// {"rows": r, "cols": c, "entries": [[poly, ...], ...]}.
Json to_json(const LaurentMatrix& m);
LaurentMatrix matrix_from_json(const Json& j, const std::string& where);

/// {"type": "complex", "ranks": [...], "boundaries": [d_1, ..., d_n]}.
Json to_json(const ChainComplex& cc);

/// Cocycle keys are "u,v" with u < v.
Json to_json(const SimplicialInput& x);

enum class InputKind { Complex, Simplicial, Alexander };

std::string to_string(InputKind kind);

/// One analysis input. Exactly one of complex / simplicial / alexander is
/// populated according to `kind`; `manifold` holds the optional dim and chi.
struct AnalysisInput {
  InputKind kind = InputKind::Complex;
  std::optional<ChainComplex> complex;
  std::optional<SimplicialInput> simplicial;
  /// Injected A_0, A_1, ... (alexander mode).
  std::vector<LaurentPoly> polynomials;
  std::optional<int> dim;
  std::optional<long long> chi;
};

/// Parses an input document. A previous analyze report is also accepted:
/// its "complex" block is re-read in direct-matrix mode.
AnalysisInput input_from_json(const Json& j);

/// Reads JSON from a file, or from standard input when path is "-".
Json read_json(const std::string& path);

AnalysisInput load_input(const std::string& path);

}  // namespace endindex
