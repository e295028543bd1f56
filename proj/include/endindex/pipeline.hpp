#pragma once

#include <optional>
#include <string>
#include <vector>

#include "endindex/index_engine.hpp"
#include "endindex/io.hpp"
#include "endindex/twisted_l2.hpp"

namespace endindex {

/// Everything computed from one input, in pipeline order.
struct Analysis {
  InputKind kind = InputKind::Complex;
  /// The complex actually analyzed: the input, the lifted simplicial chains,
  /// or the elementary complex realizing injected polynomials.
  ChainComplex complex;
  std::optional<SimplicialInput> simplicial;
  HomologyModule homology;
  Finiteness finiteness;
  EulerCharacteristic euler;
  AlexanderData alexander;
  /// Wall degrees range over 0..wall_degrees-1.
  int wall_degrees = 0;
  ExceptionalSet walls;
  std::optional<ManifoldContext> context;
  std::optional<IndexFunction> index;
  std::optional<DualityReport> duality;
  std::vector<ExcisionResult> excision;
  std::optional<CupCheck> cup;
  std::vector<std::string> notices;
};

/// Homology through Alexander polynomials only. Throws NotFinite.
Analysis analyze_alexander(const AnalysisInput& in);

/// The full pipeline. The index section needs dim and chi; without chi it is
/// omitted with a notice.
Analysis analyze(const AnalysisInput& in);

/// Report sections, shared by the CLI subcommands.
Json homology_json(const HomologyModule& h);
Json alexander_json(const AlexanderData& a);
Json walls_json(const ExceptionalSet& walls);
Json index_json(const IndexFunction& f);
Json duality_json(const DualityReport& d);
Json excision_json(const std::vector<ExcisionResult>& xs);
Json cup_json(const CupCheck& c);
Json fiber_json(const TwistedFiber& f);
Json fredholm_json(const FredholmVerdict& v);

Json report_json(const Analysis& a);
std::string report_text(const Analysis& a);

}  // namespace endindex
