#include "endindex/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace endindex {

PlotData plot_data(const IndexFunction& f) {
  PlotData p;
  for (const auto& w : f.walls) p.walls.push_back({w.delta, w.jump});
  if (f.walls.empty()) {
    p.samples = {{-1.0, f.values.front()}, {1.0, f.values.front()}};
    return p;
  }
  const auto& ws = f.walls;
  p.samples.push_back({ws.front().delta - 1.0, f.values[0]});
  for (std::size_t i = 0; i < ws.size(); ++i) {
    double offset = 0.05;
    if (i > 0) offset = std::min(offset, (ws[i].delta - ws[i - 1].delta) / 4);
    if (i + 1 < ws.size()) offset = std::min(offset, (ws[i + 1].delta - ws[i].delta) / 4);
    p.samples.push_back({ws[i].delta - offset, f.values[i]});
    p.samples.push_back({ws[i].delta + offset, f.values[i + 1]});
    if (i + 1 < ws.size()) p.samples.push_back({0.5 * (ws[i].delta + ws[i + 1].delta), f.values[i + 1]});
  }
  p.samples.push_back({ws.back().delta + 1.0, f.values.back()});
  return p;
}

Json plot_json(const PlotData& p) {
  Json samples = Json::array(), walls = Json::array();
  for (const auto& s : p.samples) samples.push_back({{"delta", s.delta}, {"index", s.index}});
  for (const auto& w : p.walls) walls.push_back({{"delta", w.delta}, {"jump", w.jump}});
  return {{"samples", samples}, {"walls", walls}};
}

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

std::string plot_text(const PlotData& p) {
  std::ostringstream out;
  out << "# delta index\n";
  for (const auto& s : p.samples) out << num(s.delta) << " " << s.index << "\n";
  for (const auto& w : p.walls) out << "# wall " << num(w.delta) << " " << w.jump << "\n";
  return out.str();
}

std::string plot_svg(const PlotData& p) {
  const double width = 640, height = 400, margin = 50;
  double x0 = p.samples.front().delta, x1 = p.samples.back().delta;
  long long vmin = p.samples.front().index, vmax = vmin;
  for (const auto& s : p.samples) {
    vmin = std::min(vmin, s.index);
    vmax = std::max(vmax, s.index);
  }
  const double y0 = static_cast<double>(vmin) - 1, y1 = static_cast<double>(vmax) + 1;
  auto sx = [&](double x) { return margin + (x - x0) / (x1 - x0) * (width - 2 * margin); };
  auto sy = [&](double y) { return height - margin - (y - y0) / (y1 - y0) * (height - 2 * margin); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin << "\" y2=\""
      << height - margin << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\"" << height - margin
      << "\" stroke=\"black\"/>\n";
  for (long long v = vmin; v <= vmax; ++v)
    out << "<text x=\"" << margin - 8 << "\" y=\"" << num(sy(static_cast<double>(v)) + 4)
        << "\" font-size=\"12\" text-anchor=\"end\">" << v << "</text>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"" << height - 12 << "\" font-size=\"13\" text-anchor=\"middle\">"
      << "delta</text>\n";

  // Interval boundaries: the plot edges and the walls.
  std::vector<double> edges{x0};
  for (const auto& w : p.walls) edges.push_back(w.delta);
  edges.push_back(x1);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    long long v = p.samples.front().index;
    for (const auto& s : p.samples)
      if (s.delta > edges[i] && s.delta < edges[i + 1]) {
        v = s.index;
        break;
      }
    out << "<line x1=\"" << num(sx(edges[i])) << "\" y1=\"" << num(sy(static_cast<double>(v))) << "\" x2=\""
        << num(sx(edges[i + 1])) << "\" y2=\"" << num(sy(static_cast<double>(v)))
        << "\" stroke=\"steelblue\" stroke-width=\"3\"/>\n";
  }
  for (const auto& w : p.walls) {
    out << "<line x1=\"" << num(sx(w.delta)) << "\" y1=\"" << margin << "\" x2=\"" << num(sx(w.delta)) << "\" y2=\""
        << height - margin << "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";
    out << "<text x=\"" << num(sx(w.delta)) << "\" y=\"" << margin - 8 << "\" font-size=\"11\" text-anchor=\"middle\">"
        << num(w.delta) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace endindex
