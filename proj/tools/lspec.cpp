// lspec: command-line front end for the λ-shaped random matrix toolkit.
//
// Exit codes: 0 success, 2 usage error, 3 budget refusal, 4 numeric
// non-convergence, 1 internal inconsistency.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lspec/algebraic.hpp"
#include "lspec/density.hpp"
#include "lspec/dyck.hpp"
#include "lspec/enumeration.hpp"
#include "lspec/errors.hpp"
#include "lspec/json_io.hpp"
#include "lspec/matrix_mc.hpp"
#include "lspec/partition.hpp"
#include "lspec/series.hpp"

using namespace lspec;
using nlohmann::json;

namespace {

std::string fmt(double v, int digits = 12) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, v);
  return buffer;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, sep);) out.push_back(item);
  return out;
}

// Output sink: a file, or stdout for "" and "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct ShapeArgs {
  std::string partition;
  std::string heights;

  void attach(CLI::App* cmd) {
    auto* p = cmd->add_option("--partition", partition,
                              "Self-conjugate partition as comma-separated parts, e.g. 5,5,5,5,4");
    auto* h = cmd->add_option("--heights", heights,
                              "Block heights a1,...,ar of the self-conjugate shape, e.g. 4,1");
    p->excludes(h);
    h->excludes(p);
  }

  Partition resolve() const {
    if (!partition.empty()) {
      Partition p = parse_partition(partition);
      require_self_conjugate(p);
      return p;
    }
    if (!heights.empty()) {
      const auto a = parse_heights(heights);
      return self_conjugate_from_heights(a);
    }
    throw UsageError("specify the shape with --partition or --heights");
  }
};

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

// ---------------------------------------------------------------------------

struct MomentsArgs {
  ShapeArgs shape;
  int kmax = 8;
  std::string method = "recurrence";
  double budget = kDefaultBruteBudget;
  std::string out;
};

int run_moments(const MomentsArgs& args) {
  const Partition p = args.shape.resolve();
  if (args.kmax < 0) throw UsageError("--kmax must be >= 0");
  const auto& a = p.heights();
  const bool fat_hook = a.size() == 2;
  const MomentTable table = count_recurrence(p, args.kmax);
  Output out(args.out);
  auto& os = out.stream();

  auto hypergeometric = [&](int k) { return count_fat_hook(a[0], a[1], k); };
  auto rational_cells = [&](int k) {
    return to_fraction_string(table.moments[k]) + "," + fmt(to_double(table.moments[k]));
  };

  if (args.method != "all") {
    std::vector<Integer> counts;
    for (int k = 0; k <= args.kmax; ++k) {
      if (args.method == "recurrence") counts.push_back(table.counts[k]);
      else if (args.method == "summation") counts.push_back(count_summation(a, k));
      else if (args.method == "hypergeometric") {
        if (!fat_hook) throw UsageError("the hypergeometric method needs a two-block (fat hook) shape");
        counts.push_back(hypergeometric(k));
      } else if (args.method == "brute") counts.push_back(count_brute(p, k, args.budget));
      else throw UsageError("unknown method '" + args.method + "'");
    }
    os << "k,C_k,m_k,m_k_decimal\n";
    for (int k = 0; k <= args.kmax; ++k) {
      const Rational m = Rational(counts[k]) / p.length();
      os << k << "," << counts[k] << "," << to_fraction_string(m) << "," << fmt(to_double(m)) << "\n";
    }
    return 0;
  }

  os << "k,C_recurrence,C_summation,C_hypergeometric,C_brute,m_k,m_k_decimal\n";
  bool agree = true;
  for (int k = 0; k <= args.kmax; ++k) {
    const Integer rec = table.counts[k];
    const Integer sum = count_summation(a, k);
    std::string hyp = "NA", brute = "NA";
    agree = agree && sum == rec;
    if (fat_hook) {
      const Integer h = hypergeometric(k);
      agree = agree && h == rec;
      hyp = h.str();
    }
    if (brute_force_bound(p, k) <= args.budget) {
      const Integer b = count_brute(p, k, args.budget);
      agree = agree && b == rec;
      brute = b.str();
    }
    os << k << "," << rec << "," << sum << "," << hyp << "," << brute << "," << rational_cells(k) << "\n";
  }
  if (!agree) {
    std::cerr << "error: counting methods disagree\n";
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct TransformArgs {
  ShapeArgs shape;
  std::string what = "R";
  int order = 16;
  std::string out;
};

int run_transform(const TransformArgs& args) {
  const Partition p = args.shape.resolve();
  if (args.order < 1) throw UsageError("--order must be >= 1");
  const int K = args.order;
  const MomentTable table = count_recurrence(p, K + 1);
  TruncatedSeries series(0);
  std::string variable = "z";
  if (args.what == "G") {
    series = moments_to_G(table.moments, K);
    variable = "w";
  } else if (args.what == "R" || args.what == "S") {
    series = G_to_R(moments_to_G(table.moments, K + 2));
    if (args.what == "S") series = R_to_S(series);
  } else {
    throw UsageError("--what must be G, R or S");
  }
  Output out(args.out);
  auto& os = out.stream();
  os << "n,coefficient,decimal\n";
  for (int n = 0; n <= series.order(); ++n)
    os << n << "," << to_fraction_string(series[n]) << "," << fmt(to_double(series[n])) << "\n";
  std::cerr << args.what << " = " << series.to_string(variable) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct DyckConvertArgs {
  std::string partition;
  std::string direction;
  std::string in;
  std::string out;
};

int run_dyck_convert(const DyckConvertArgs& args) {
  const Partition p = parse_partition(args.partition);
  require_self_conjugate(p);
  const std::string text = read_input(args.in);
  Output out(args.out);
  if (args.direction == "tree2path") {
    out.stream() << path_to_json(tree_to_path(p, tree_from_json(text))) << "\n";
  } else if (args.direction == "path2tree") {
    out.stream() << tree_to_json(path_to_tree(p, path_from_json(text))) << "\n";
  } else {
    throw UsageError("--direction must be tree2path or path2tree");
  }
  return 0;
}

struct DyckCountArgs {
  std::string partition;
  int k = 0;
  double budget = kDefaultBruteBudget;
};

int run_dyck_count(const DyckCountArgs& args) {
  const Partition p = parse_partition(args.partition);
  require_self_conjugate(p);
  if (args.k < 0) throw UsageError("--k must be >= 0");
  std::cout << "k,paths\n" << args.k << "," << count_paths(p, args.k, args.budget) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct AlgebraicArgs {
  ShapeArgs shape;
  std::string json_path;
};

json poly_json(const BivariatePoly& poly) {
  json terms = json::array();
  for (const auto& [deg, c] : poly.terms()) terms.push_back({{"i", deg.first}, {"j", deg.second}, {"c", c.str()}});
  return terms;
}

int run_algebraic(const AlgebraicArgs& args) {
  const Partition p = args.shape.resolve();
  const auto& a = p.heights();
  const BivariatePoly P = eliminate_moment_equation(a);
  const BivariatePoly L = cauchy_equation(P, p.length());
  for (const auto& [deg, c] : L.terms()) std::cout << "(" << deg.first << "," << deg.second << "): " << c << "\n";
  json j = {{"schema", 1},
            {"heights", a},
            {"ell", p.length()},
            {"variables", {"G", "z"}},
            {"degree_G", L.degree_x()},
            {"degree_z", L.degree_z()},
            {"L", poly_json(L)},
            {"P", poly_json(P)}};
  if (a.size() == 2) j["matches_fat_hook_cubic"] = fat_hook_cubic(a[0], a[1]).normalized() == L;
  std::cout << j.dump() << "\n";
  if (!args.json_path.empty()) Output(args.json_path).stream() << j.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct DensityArgs {
  ShapeArgs shape;
  int grid = 200;
  std::optional<double> xmin, xmax;
  std::string eps_ladder = "1e-2,1e-3,1e-4";
  std::string method = "auto";
  bool no_richardson = false;
  std::string out;
};

int run_density(const DensityArgs& args) {
  const Partition p = args.shape.resolve();
  if (args.grid < 1) throw UsageError("--grid must be >= 1");
  StieltjesOptions options;
  options.eps_ladder.clear();
  for (const auto& e : split(args.eps_ladder, ',')) {
    try {
      options.eps_ladder.push_back(std::stod(e));
    } catch (const std::exception&) {
      throw UsageError("bad --eps-ladder entry '" + e + "'");
    }
    if (!(options.eps_ladder.back() > 0)) throw UsageError("--eps-ladder entries must be positive");
  }
  options.richardson = !args.no_richardson;
  const auto& a = p.heights();
  const bool fat_hook = a.size() == 2;
  if ((args.method == "closed" || args.method == "continuation") && !fat_hook)
    throw UsageError("--method " + args.method + " needs a two-block (fat hook) shape");
  if (args.method != "auto" && args.method != "closed" && args.method != "continuation" && args.method != "stieltjes")
    throw UsageError("--method must be auto, closed, continuation or stieltjes");

  const AnalyticLaw law = analytic_law(p, options);
  const double lo = args.xmin.value_or(law.support_lo), hi = args.xmax.value_or(law.support_hi);
  if (!(hi > lo)) throw UsageError("need xmax > xmin");
  std::optional<FatHookSpectrum> spectrum;
  if (fat_hook) spectrum = fat_hook_support(a[0], a[1]);

  Output out(args.out);
  auto& os = out.stream();
  os << "x,f\n";
  for (int i = 0; i < args.grid; ++i) {
    const double x = lo + (hi - lo) * (i + 0.5) / args.grid;
    double f = 0.0;
    if (x > 0) {
      if (args.method == "stieltjes" || (args.method == "auto" && !fat_hook)) {
        f = stieltjes_density(a, x, options).density;
      } else if (args.method == "closed") {
        f = fat_hook_density(*spectrum, x).in_support ? fat_hook_density_closed_form(a[0], a[1], x) : 0.0;
      } else if (args.method == "continuation") {
        f = fat_hook_density(*spectrum, x).in_support ? fat_hook_density_continuation(a[0], a[1], x) : 0.0;
      } else {
        f = fat_hook_density(*spectrum, x).value;
      }
    }
    os << fmt(x, 15) << "," << fmt(f, 15) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct SimulateArgs {
  ShapeArgs shape;
  int N = 30;
  int trials = 1000;
  std::uint64_t seed = 42;
  int bins = 200;
  int kmax = 4;
  int threads = 0;
  std::string law = "gaussian";
  std::string out;
  std::string moments_out;
};

ExperimentConfig experiment_config(const SimulateArgs& args, const Partition& p) {
  ExperimentConfig config;
  config.N = args.N;
  config.trials = args.trials;
  config.seed = args.seed;
  config.bins = args.bins;
  config.kmax = args.kmax;
  config.threads = args.threads;
  config.law = parse_entry_law(args.law);
  if (p.heights().size() == 2) config.range_max = 1.1 * fat_hook_support(p.heights()[0], p.heights()[1]).support_max();
  return config;
}

void write_histogram(std::ostream& os, const Histogram& h) {
  os << "bin_left,bin_right,mass\n";
  for (size_t b = 0; b < h.masses.size(); ++b)
    os << fmt(h.edges[b], 15) << "," << fmt(h.edges[b + 1], 15) << "," << fmt(h.masses[b], 15) << "\n";
}

void write_moments(std::ostream& os, const SpectralSample& s) {
  os << "k,mean,stderr\n";
  for (const auto& m : s.moments) os << m.k << "," << fmt(m.mean, 15) << "," << fmt(m.standard_error, 15) << "\n";
}

int run_simulate(const SimulateArgs& args) {
  const Partition p = args.shape.resolve();
  const SpectralSample sample = run_experiment(p, experiment_config(args, p));
  {
    Output out(args.out);
    write_histogram(out.stream(), sample.histogram);
  }
  if (!args.moments_out.empty()) {
    Output out(args.moments_out);
    write_moments(out.stream(), sample);
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct CompareArgs {
  SimulateArgs sim;
  std::string prefix = "compare";
};

void write_svg(const std::string& path, const std::string& title, const Histogram& continuous,
               const AnalyticLaw& law, double empirical_atom) {
  const double width = 800, height = 500, left = 60, right = 20, top = 40, bottom = 50;
  const double plot_w = width - left - right, plot_h = height - top - bottom;
  const double x_max = continuous.edges.back();
  std::vector<double> bar_heights;
  for (size_t b = 0; b < continuous.masses.size(); ++b)
    bar_heights.push_back(continuous.masses[b] / (continuous.edges[b + 1] - continuous.edges[b]));
  std::vector<std::pair<double, double>> curve;
  const int samples = 400;
  for (int i = 0; i < samples; ++i) {
    const double x = law.support_lo + (law.support_hi - law.support_lo) * (i + 0.5) / samples;
    if (x > 0) curve.emplace_back(x, law.density(x));
  }
  // The density may diverge at 0; scale to the histogram instead.
  double y_max = 0;
  for (double h : bar_heights) y_max = std::max(y_max, h);
  if (y_max <= 0) y_max = 1;
  y_max *= 1.15;
  auto sx = [&](double x) { return left + plot_w * x / x_max; };
  auto sy = [&](double y) { return top + plot_h * (1 - std::min(y, y_max) / y_max); };

  Output out(path);
  auto& os = out.stream();
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << title << "</text>\n";
  for (size_t b = 0; b < bar_heights.size(); ++b) {
    const double x0 = sx(continuous.edges[b]), x1 = sx(continuous.edges[b + 1]);
    const double y = sy(bar_heights[b]);
    os << "<rect x=\"" << fmt(x0, 6) << "\" y=\"" << fmt(y, 6) << "\" width=\"" << fmt(x1 - x0, 6)
       << "\" height=\"" << fmt(top + plot_h - y, 6) << "\" fill=\"#9ecae1\" stroke=\"#6baed6\" stroke-width=\"0.5\"/>\n";
  }
  os << "<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\" points=\"";
  for (const auto& [x, y] : curve) os << fmt(sx(x), 6) << "," << fmt(sy(y), 6) << " ";
  os << "\"/>\n";
  os << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w << "\" y2=\"" << top + plot_h
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + plot_h
     << "\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 5; ++t) {
    const double xv = x_max * t / 5, yv = y_max * t / 5;
    os << "<text x=\"" << fmt(sx(xv), 6) << "\" y=\"" << top + plot_h + 18 << "\" text-anchor=\"middle\">"
       << fmt(xv, 3) << "</text>\n";
    os << "<text x=\"" << left - 6 << "\" y=\"" << fmt(sy(yv) + 4, 6) << "\" text-anchor=\"end\">" << fmt(yv, 3)
       << "</text>\n";
  }
  os << "<text x=\"" << left + plot_w - 10 << "\" y=\"" << top + 15 << "\" text-anchor=\"end\">"
     << "atom at 0: analytic " << fmt(law.atom_mass, 4) << ", empirical " << fmt(empirical_atom, 4) << "</text>\n";
  os << "<text x=\"" << left + plot_w - 10 << "\" y=\"" << top + 32 << "\" text-anchor=\"end\" fill=\"#d62728\">"
     << "limiting density</text>\n";
  os << "<text x=\"" << left + plot_w - 10 << "\" y=\"" << top + 49 << "\" text-anchor=\"end\" fill=\"#3182bd\">"
     << "eigenvalue histogram (continuous part)</text>\n";
  os << "</svg>\n";
}

int run_compare(const CompareArgs& args) {
  const Partition p = args.sim.shape.resolve();
  ExperimentConfig config = experiment_config(args.sim, p);
  const AnalyticLaw law = analytic_law(p);
  if (!config.range_max) config.range_max = 1.1 * law.support_hi;
  const SpectralSample sample = run_experiment(p, config);
  const std::vector<double> analytic = analytic_bin_masses(law, sample.continuous_histogram.edges);
  const std::vector<Rational> exact = moments(p, config.kmax);

  double l1 = 0;
  for (size_t b = 0; b < analytic.size(); ++b) l1 += std::abs(sample.continuous_histogram.masses[b] - analytic[b]);

  {
    Output out(args.prefix + ".csv");
    auto& os = out.stream();
    os << "bin_left,bin_right,empirical_mass,empirical_continuous_mass,analytic_continuous_mass\n";
    for (size_t b = 0; b < analytic.size(); ++b)
      os << fmt(sample.histogram.edges[b], 15) << "," << fmt(sample.histogram.edges[b + 1], 15) << ","
         << fmt(sample.histogram.masses[b], 15) << "," << fmt(sample.continuous_histogram.masses[b], 15) << ","
         << fmt(analytic[b], 15) << "\n";
  }
  json moment_rows = json::array();
  double max_gap = 0, max_z = 0;
  for (const auto& m : sample.moments) {
    const double theory = to_double(exact[m.k]);
    const double gap = std::abs(m.mean - theory);
    const double z = m.standard_error > 0 ? gap / m.standard_error : 0.0;
    max_gap = std::max(max_gap, gap);
    max_z = std::max(max_z, z);
    moment_rows.push_back({{"k", m.k}, {"empirical", m.mean}, {"stderr", m.standard_error},
                           {"analytic", to_fraction_string(exact[m.k])}, {"analytic_decimal", theory},
                           {"gap", gap}, {"z_score", z}});
  }
  const json summary = {{"schema", 1},
                        {"partition", join_ints(p.parts())},
                        {"heights", p.heights()},
                        {"N", config.N},
                        {"trials", config.trials},
                        {"seed", config.seed},
                        {"law", to_string(config.law)},
                        {"bins", config.bins},
                        {"support", {law.support_lo, law.support_hi}},
                        {"moments", moment_rows},
                        {"max_moment_gap", max_gap},
                        {"max_moment_z_score", max_z},
                        {"atom", {{"analytic", law.atom_mass},
                                  {"empirical", sample.near_zero_fraction},
                                  {"difference", std::abs(sample.near_zero_fraction - law.atom_mass)}}},
                        {"l1_continuous", l1}};
  Output(args.prefix + ".json").stream() << summary.dump(2) << "\n";
  write_svg(args.prefix + ".svg",
            "λ = (" + join_ints(p.parts()) + "), N = " + std::to_string(config.N) + ", " +
                std::to_string(config.trials) + " samples",
            sample.continuous_histogram, law, sample.near_zero_fraction);
  std::cout << "max moment gap " << fmt(max_gap, 6) << " (max z " << fmt(max_z, 3) << "), atom "
            << fmt(sample.near_zero_fraction, 6) << " vs " << fmt(law.atom_mass, 6) << ", L1 " << fmt(l1, 6)
            << "\nwrote " << args.prefix << ".csv, " << args.prefix << ".svg, " << args.prefix << ".json\n";
  return 0;
}

void attach_simulation_options(CLI::App* cmd, SimulateArgs& args) {
  args.shape.attach(cmd);
  cmd->add_option("-N,--N", args.N, "Dilation factor N; the matrix is (Nℓ)×(Nℓ)")->capture_default_str();
  cmd->add_option("--trials", args.trials, "Number of independent matrices")->capture_default_str();
  cmd->add_option("--seed", args.seed, "Master seed (64-bit); per-trial seeds derive from it")->capture_default_str();
  cmd->add_option("--bins", args.bins, "Histogram bins")->capture_default_str();
  cmd->add_option("--kmax", args.kmax, "Highest empirical moment")->capture_default_str();
  cmd->add_option("--law", args.law, "Entry law: gaussian (complex, E|X|²=1) or phase (e^{iθ})")->capture_default_str();
  cmd->add_option("--threads", args.threads, "Worker threads (0: LS_THREADS or all cores)")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lspec: spectra of random matrices with a Young-diagram zero pattern.\n"
               "Exit codes: 0 ok, 2 usage error, 3 budget refusal, 4 numeric non-convergence."};
  app.require_subcommand(1);
  std::function<int()> action;

  MomentsArgs moments_args;
  auto* moments_cmd = app.add_subcommand("moments", "Count λ-plane trees C_k and moments m_k = C_k/ℓ.\n"
                                                    "CSV columns: k, C_k, m_k as num/den, m_k as decimal.");
  moments_args.shape.attach(moments_cmd);
  moments_cmd->add_option("--kmax", moments_args.kmax, "Largest k")->capture_default_str();
  moments_cmd->add_option("--method", moments_args.method, "recurrence | summation | hypergeometric | brute | all")
      ->capture_default_str();
  moments_cmd->add_option("--budget", moments_args.budget, "Brute-force work budget (labelled trees)")->capture_default_str();
  moments_cmd->add_option("--out", moments_args.out, "CSV output path (default stdout)");
  moments_cmd->callback([&] { action = [&] { return run_moments(moments_args); }; });

  TransformArgs transform_args;
  auto* transform_cmd = app.add_subcommand("transform", "Exact G, R or S series of the limiting law.\n"
                                                        "G is in w = 1/z. CSV columns: n, coefficient (num/den), decimal.");
  transform_args.shape.attach(transform_cmd);
  transform_cmd->add_option("--what", transform_args.what, "G | R | S")->capture_default_str();
  transform_cmd->add_option("--order", transform_args.order, "Truncation order K")->capture_default_str();
  transform_cmd->add_option("--out", transform_args.out, "CSV output path (default stdout)");
  transform_cmd->callback([&] { action = [&] { return run_transform(transform_args); }; });

  auto* dyck_cmd = app.add_subcommand("dyck", "λ-Dyck paths: tree/path conversion and counting.");
  dyck_cmd->require_subcommand(1);
  DyckConvertArgs convert_args;
  auto* convert_cmd = dyck_cmd->add_subcommand(
      "convert", "Convert between JSON trees {\"children\":[...],\"labels\":[...]} (preorder)\n"
                 "and JSON paths [[i,j,h],...] (k=0 without a diagonal cell: {\"steps\":[],\"root_label\":c}).");
  convert_cmd->add_option("--partition", convert_args.partition, "Self-conjugate partition")->required();
  convert_cmd->add_option("--direction", convert_args.direction, "tree2path | path2tree")->required();
  convert_cmd->add_option("--in", convert_args.in, "Input JSON file (default stdin)");
  convert_cmd->add_option("--out", convert_args.out, "Output JSON file (default stdout)");
  convert_cmd->callback([&] { action = [&] { return run_dyck_convert(convert_args); }; });
  DyckCountArgs count_args;
  auto* count_cmd = dyck_cmd->add_subcommand("count", "Count λ-Dyck paths of length 2k by exhaustive search.");
  count_cmd->add_option("--partition", count_args.partition, "Self-conjugate partition")->required();
  count_cmd->add_option("--k", count_args.k, "Half-length k")->required();
  count_cmd->add_option("--budget", count_args.budget, "Search-node budget")->capture_default_str();
  count_cmd->callback([&] { action = [&] { return run_dyck_count(count_args); }; });

  AlgebraicArgs algebraic_args;
  auto* algebraic_cmd = app.add_subcommand(
      "algebraic", "Polynomial L(G, z) satisfied by the Cauchy transform.\n"
                   "Prints \"(i,j): c\" for c·G^i·z^j, then the same data as a JSON object.");
  algebraic_args.shape.attach(algebraic_cmd);
  algebraic_cmd->add_option("--json", algebraic_args.json_path, "Also write the JSON object to this file");
  algebraic_cmd->callback([&] { action = [&] { return run_algebraic(algebraic_args); }; });

  DensityArgs density_args;
  auto* density_cmd = app.add_subcommand(
      "density", "Limiting density on a midpoint grid. CSV columns: x, f(x) (density per unit x).");
  density_args.shape.attach(density_cmd);
  density_cmd->add_option("--grid", density_args.grid, "Number of grid points")->capture_default_str();
  density_cmd->add_option("--xmin", density_args.xmin, "Grid start (default: lower support edge)");
  density_cmd->add_option("--xmax", density_args.xmax, "Grid end (default: upper support edge)");
  density_cmd->add_option("--eps-ladder", density_args.eps_ladder, "Imaginary offsets for Stieltjes inversion")
      ->capture_default_str();
  density_cmd->add_flag("--no-richardson", density_args.no_richardson, "Report the smallest rung without extrapolation");
  density_cmd->add_option("--method", density_args.method, "auto | closed | continuation | stieltjes")->capture_default_str();
  density_cmd->add_option("--out", density_args.out, "CSV output path (default stdout)");
  density_cmd->callback([&] { action = [&] { return run_density(density_args); }; });

  SimulateArgs simulate_args;
  auto* simulate_cmd = app.add_subcommand(
      "simulate", "Monte Carlo eigenvalues of W = X X*/N.\n"
                  "Histogram CSV: bin_left, bin_right, mass (fractions summing to 1).\n"
                  "Moments CSV: k, mean, stderr of (1/(Nℓ)) tr W^k across trials.");
  attach_simulation_options(simulate_cmd, simulate_args);
  simulate_cmd->add_option("--out", simulate_args.out, "Histogram CSV path (default stdout)");
  simulate_cmd->add_option("--emit-moments", simulate_args.moments_out, "Moments CSV path");
  simulate_cmd->callback([&] { action = [&] { return run_simulate(simulate_args); }; });

  CompareArgs compare_args;
  compare_args.sim.bins = 100;
  auto* compare_cmd = app.add_subcommand(
      "compare", "Simulate and compare with the limiting law.\n"
                 "Writes PREFIX.csv (bin masses), PREFIX.svg (histogram with density overlay)\n"
                 "and PREFIX.json (schema 1: moment gaps, atom check, L1 distance).");
  attach_simulation_options(compare_cmd, compare_args.sim);
  compare_cmd->add_option("--prefix", compare_args.prefix, "Output path prefix")->capture_default_str();
  compare_cmd->callback([&] { action = [&] { return run_compare(compare_args); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SeriesError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << " (bound " << e.bound() << ", budget " << e.budget() << ")\n";
    return 3;
  } catch (const ConvergenceError& e) {
    std::cerr << "did not converge: " << e.what() << " (residual " << e.residual() << ", iterations "
              << e.iterations() << ")\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
