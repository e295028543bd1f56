#pragma once

#include <string>
#include <vector>

#include "endindex/index_engine.hpp"
#include "endindex/io.hpp"

namespace endindex {

struct PlotSample {
  double delta = 0.0;
  long long index = 0;
};

struct WallMarker {
  double delta = 0.0;
  long long jump = 0;
};

struct PlotData {
  std::vector<PlotSample> samples;
  std::vector<WallMarker> walls;
};

/// Samples at ±0.05 around each wall (closer when walls crowd), the midpoint
/// of each bounded interval, and one point a unit beyond the outermost walls.
/// Without walls: δ = -1 and δ = 1.
PlotData plot_data(const IndexFunction& f);

Json plot_json(const PlotData& p);
/// "delta index" rows followed by "# wall delta jump" rows.
std::string plot_text(const PlotData& p);
/// Standalone SVG of the step function with dashed wall markers.
std::string plot_svg(const PlotData& p);

}  // namespace endindex
