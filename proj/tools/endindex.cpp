// Command-line front end for the end-periodic index pipeline.

#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "endindex/pipeline.hpp"
#include "endindex/plot.hpp"

using namespace endindex;

namespace {

struct Options {
  std::string input;
  std::string output;
  std::string format = "json";
  std::optional<long long> chi;
  std::optional<int> dim;
  std::size_t samples = 16;
  double tol = kNumericRankTolerance;
  std::string svg;
  std::optional<double> delta;
  std::string z;
  std::string lambda;
  unsigned m = 1;
  double delta1 = 1.0;
  double delta2 = 0.5;
  std::size_t window = 200;
};

void emit(const Options& o, const Json& j, const std::string& text) {
  std::string body = o.format == "text" ? text : j.dump(2) + "\n";
  if (o.output.empty() || o.output == "-") {
    std::cout << body;
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw Error("cannot open output file '" + o.output + "'");
  f << body;
}

AnalysisInput load(const Options& o) {
  AnalysisInput in = load_input(o.input);
  if (o.dim) in.dim = o.dim;
  if (o.chi) in.chi = o.chi;
  return in;
}

std::complex<double> parse_complex(const std::string& s) {
  auto comma = s.find(',');
  try {
    double re = std::stod(s.substr(0, comma));
    double im = comma == std::string::npos ? 0.0 : std::stod(s.substr(comma + 1));
    return {re, im};
  } catch (const std::logic_error&) {
    throw ParseError("malformed complex number '" + s + "' (expected re,im)");
  }
}

bool looks_inexact(const std::string& s) { return s.find_first_of(".eE") != std::string::npos; }

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream s;
  s << "[";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << v[i];
  s << "]";
  return s.str();
}

void cmd_analyze(const Options& o) {
  Analysis a = analyze(load(o));
  emit(o, report_json(a), report_text(a));
}

void cmd_alexander(const Options& o) {
  Analysis a = analyze_alexander(load(o));
  Json j = {{"homology", homology_json(a.homology)}, {"alexander", alexander_json(a.alexander)}};
  std::ostringstream t;
  for (std::size_t k = 0; k < a.alexander.polys.size(); ++k)
    t << "A_" << k << " = " << a.alexander.polys[k].to_string() << "\n";
  emit(o, j, t.str());
}

void cmd_index(const Options& o) {
  AnalysisInput in = load(o);
  if (!in.chi) throw SchemaError("index: chi(M) is required (manifold.chi or --chi)");
  Analysis a = analyze(in);
  Json j = {{"walls", walls_json(a.walls)}, {"index", index_json(*a.index)}};
  std::ostringstream t;
  t << "values [";
  for (std::size_t i = 0; i < a.index->values.size(); ++i) t << (i ? ", " : "") << a.index->values[i];
  t << "]\n";
  if (o.delta) {
    long long v = index_at(*a.index, *o.delta);
    j["index_at"] = {{"delta", *o.delta}, {"value", v}};
    t << "index at " << *o.delta << ": " << v << "\n";
  }
  emit(o, j, t.str());
}

void cmd_twisted(const Options& o) {
  if (o.z.empty()) throw SchemaError("twisted: --z is required");
  Analysis a = analyze_alexander(load(o));
  Json j;
  std::ostringstream t;
  if (looks_inexact(o.z)) {
    TwistedFiber f = twisted_dims(a.complex, parse_complex(o.z), o.tol);
    j["fiber"] = fiber_json(f);
    t << "dims " << join(f.dims) << "\n";
  } else {
    GaussianRational z = parse_gaussian(o.z);
    TwistedFiber f = twisted_dims(a.complex, z);
    auto u = uct_dims(a.homology, z);
    j["fiber"] = fiber_json(f);
    j["uct_dims"] = u;
    j["uct_agrees"] = u == f.dims;
    t << "dims " << join(f.dims) << "\nuct  " << join(u) << (u == f.dims ? " (agrees)" : " (DISAGREES)") << "\n";
  }
  emit(o, j, t.str());
}

void cmd_fredholm(const Options& o) {
  if (!o.delta) throw SchemaError("fredholm: --delta is required");
  AnalysisInput in = load(o);
  ChainComplex cc = in.kind == InputKind::Complex ? *in.complex : analyze_alexander(in).complex;
  FredholmVerdict v = fredholm_check(cc, *o.delta, o.samples, o.tol);
  std::ostringstream t;
  t << "delta " << v.delta << ": symbolic " << (v.symbolic ? "Fredholm" : "not Fredholm") << ", numeric "
    << (v.numeric ? "Fredholm" : "not Fredholm") << (v.agree() ? "" : " (DISAGREE)") << "\n";
  emit(o, fredholm_json(v), t.str());
}

Json l2_row(std::complex<double> lambda, unsigned m, double d1, double d2, std::size_t window, double tol) {
  Json row = {{"lambda", {lambda.real(), lambda.imag()}}, {"m", m}, {"delta1", d1}, {"delta2", d2}};
  std::size_t analytic = l2_hom_dim_analytic(lambda, m, d1, d2);
  TruncatedKernel k = l2_kernel_truncated({lambda, m, d1, d2, window, tol});
  row["analytic"] = analytic;
  row["truncated"] = k.count;
  row["nullity"] = k.nullity;
  row["boundary_fractions"] = k.boundary_fractions;
  row["agree"] = analytic == k.count;
  return row;
}

void cmd_l2(const Options& o) {
  Json rows = Json::array();
  if (!o.lambda.empty()) {
    rows.push_back(l2_row(parse_complex(o.lambda), o.m, o.delta1, o.delta2, o.window, o.tol));
  } else {
    const std::complex<double> lambdas[] = {{0.5, 0.0}, {1.0, 0.0}, {2.0, 0.0}, {1.0, 1.0}};
    const double pairs[][2] = {{1.0, 0.5}, {0.5, 1.0}, {1.0, -1.0}, {-1.0, -2.0}};
    for (auto l : lambdas)
      for (unsigned m : {1u, 2u})
        for (const auto& p : pairs) rows.push_back(l2_row(l, m, p[0], p[1], o.window, o.tol));
  }
  std::ostringstream t;
  for (const auto& r : rows)
    t << "lambda (" << r["lambda"][0].get<double>() << ", " << r["lambda"][1].get<double>() << ") m "
      << r["m"].get<unsigned>() << " deltas (" << r["delta1"].get<double>() << ", " << r["delta2"].get<double>()
      << "): analytic " << r["analytic"].get<std::size_t>() << ", truncated " << r["truncated"].get<std::size_t>()
      << "\n";
  emit(o, Json{{"l2_oracle", rows}}, t.str());
}

void cmd_cup(const Options& o) {
  AnalysisInput in = load(o);
  if (in.kind != InputKind::Simplicial)
    throw UnsupportedInput("cup-check needs simplicial input; direct-matrix complexes carry no cup product");
  CupCheck c = cup_product_check(*in.simplicial);
  std::ostringstream t;
  t << (c.exact ? "exact" : "not exact") << ", betti " << join(c.betti) << ", defects " << join(c.defects) << "\n";
  emit(o, cup_json(c), t.str());
}

void cmd_duality(const Options& o) {
  AnalysisInput in = load(o);
  Analysis a = in.chi ? analyze(in) : analyze_alexander(in);
  int n = in.dim ? *in.dim : static_cast<int>(a.complex.top_degree());
  DualityReport d = a.duality ? *a.duality : duality_check(a.alexander, n, nullptr);
  std::ostringstream t;
  for (const auto& p : d.pairs)
    t << "A_" << p.k << " vs reversed A_" << p.partner << ": " << p.lhs << " | " << p.rhs << " "
      << (p.pass ? "ok" : "FAIL") << "\n";
  if (!d.parity.empty()) t << "parity " << (d.parity_pass() ? "ok" : "FAIL") << "\n";
  if (!d.pass()) std::cerr << "warning: duality check failed\n";
  emit(o, duality_json(d), t.str());
}

void cmd_plotdata(const Options& o) {
  AnalysisInput in = load(o);
  if (!in.chi) throw SchemaError("plotdata: chi(M) is required (manifold.chi or --chi)");
  Analysis a = analyze(in);
  PlotData p = plot_data(*a.index);
  if (!o.svg.empty()) {
    std::ofstream f(o.svg);
    if (!f) throw Error("cannot open SVG file '" + o.svg + "'");
    f << plot_svg(p);
  }
  emit(o, plot_json(p), plot_text(p));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Index of end-periodic complexes from Alexander data"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("--input,-i", o.input, "Input JSON file ('-' for stdin)");
    if (needs_input) in->required();
    sub->add_option("--output,-o", o.output, "Output file (default stdout)");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--chi", o.chi, "Euler characteristic of M");
    sub->add_option("--dim", o.dim, "Dimension n of M")->check(CLI::PositiveNumber);
    sub->add_option("--tol", o.tol, "Relative numeric rank tolerance")->check(CLI::PositiveNumber);
  };

  struct Entry {
    const char* name;
    const char* help;
    void (*run)(const Options&);
    bool needs_input;
  };
  const Entry entries[] = {
      {"analyze", "Full report: homology, A_k, walls, index, duality, cup check", cmd_analyze, true},
      {"alexander", "Homology modules and Alexander polynomials", cmd_alexander, true},
      {"index", "Index step function (needs chi)", cmd_index, true},
      {"twisted", "Twisted cohomology dimensions at --z", cmd_twisted, true},
      {"fredholm", "Exactness of the twisted complexes on |z| = e^delta", cmd_fredholm, true},
      {"l2-oracle", "Truncated weighted shift-operator kernel vs the annulus count", cmd_l2, false},
      {"cup-check", "Exactness of cup product with the cover class", cmd_cup, true},
      {"duality", "Root symmetry and index parity", cmd_duality, true},
      {"plotdata", "Step-function samples and wall markers", cmd_plotdata, true},
  };
  void (*selected)(const Options&) = nullptr;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    common(sub, e.needs_input);
    std::string name = e.name;
    if (name == "index" || name == "fredholm") sub->add_option("--delta", o.delta, "Weight delta");
    if (name == "fredholm") sub->add_option("--samples", o.samples, "Points sampled on the circle");
    if (name == "twisted") sub->add_option("--z", o.z, "Evaluation point re,im (rational for exact ranks)");
    if (name == "plotdata") sub->add_option("--svg", o.svg, "Also write an SVG rendering here");
    if (name == "l2-oracle") {
      sub->add_option("--lambda", o.lambda, "Eigenvalue re,im (omit for the full grid)");
      sub->add_option("--m", o.m, "Jordan block size")->check(CLI::PositiveNumber);
      sub->add_option("--delta1", o.delta1, "Weight on the negative tail");
      sub->add_option("--delta2", o.delta2, "Weight on the positive tail");
      sub->add_option("--window", o.window, "Truncation half-width N")->check(CLI::PositiveNumber);
    }
    sub->callback([&selected, run = e.run] { selected = run; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    selected(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
