// Command-line front end: graph generation, detection, resistances,
// thresholds and Monte Carlo simulation.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "graphscan/detect.hpp"
#include "graphscan/electrical.hpp"
#include "graphscan/graph.hpp"
#include "graphscan/harness.hpp"
#include "graphscan/models.hpp"

namespace {

using namespace graphscan;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("LESS_SEED")) return std::strtoull(env, nullptr, 10);
  return 1;
}

std::vector<double> read_y_file(const std::string& path, int expected) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open y file: " + path);
  std::vector<double> y;
  double v;
  while (in >> v) y.push_back(v);
  if (expected >= 0 && static_cast<int>(y.size()) != expected)
    throw std::runtime_error("y file has " + std::to_string(y.size()) +
                             " values, expected " + std::to_string(expected));
  return y;
}

int cmd_graphgen(const GraphSpec& spec, std::uint64_t seed,
                 const std::string& out_path) {
  DirectedGraph g = build_model_graph(spec, seed);
  write_edge_list_file(out_path, g);
  std::cout << "p " << g.vertex_count() << "\nm " << g.edge_count()
            << "\nconnected " << (g.connected() ? "true" : "false") << "\n";
  return 0;
}

int cmd_detect(const std::string& graph_path, const std::string& y_path,
               double rho, const std::string& method,
               const std::string& trace_path, const DetectOptions& opts) {
  DirectedGraph g = read_edge_list_file(graph_path);
  std::vector<double> y = read_y_file(y_path, g.vertex_count());

  DetectionResult r;
  if (method == "gss") r = gss_bruteforce(g, y, rho, opts);
  else if (method == "less") r = less(g, y, rho, opts);
  else if (method == "max") { r.statistic = max_test(y); r.method = "max"; }
  else if (method == "sum") { r.statistic = sum_test(y); r.method = "sum"; }
  else throw std::runtime_error("method must be one of gss|less|max|sum");

  std::cout.precision(6);
  std::cout << r.statistic << "\n";
  if (r.approximate)
    std::cerr << "warning: approximate result, gap bound " << r.gap_bound
              << "\n";
  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    write_trace_csv(out, r);
  }
  return 0;
}

int cmd_resistance(const std::string& graph_path, const std::string& csv_path) {
  DirectedGraph g = read_edge_list_file(graph_path);
  ResistanceTable table = resistance_table(g);
  std::cout.precision(6);
  for (int e = 0; e < g.arc_count(); ++e) {
    const Arc& a = g.arc(e);
    if (g.undirected_encoding() && a.tail > a.head) continue;
    std::cout << a.tail << ' ' << a.head << ' ' << table.arc_resistance[e]
              << "\n";
  }
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    write_resistance_csv(out, g, table);
  }
  return 0;
}

int cmd_threshold(int p, double rho, double alpha,
                  const std::string& graph_path, double r_class_flag) {
  double r_class = r_class_flag;
  if (!graph_path.empty()) {
    DirectedGraph g = read_edge_list_file(graph_path);
    p = g.vertex_count();
    r_class = r_class_bound(g, rho);
  } else if (r_class < 0.0) {
    r_class = rho;  // conservative fallback: max_e r_e <= 1 on unweighted graphs
  }
  ThresholdReport rep = make_threshold_report(p, rho, r_class, alpha);
  std::cout.precision(6);
  write_threshold_report(std::cout, rep);
  return 0;
}

int cmd_simulate(const std::string& config_path, const std::string& panel,
                 const std::string& outdir, std::uint64_t seed, bool seed_set,
                 int threads) {
  if (!panel.empty()) {
    PanelResult res = fig1_experiment(panel, seed_set ? seed : default_seed(),
                                      200, threads);
    write_panel_outputs(outdir, res);
    std::cout.precision(6);
    for (size_t d = 0; d < res.config.detectors.size(); ++d)
      std::cout << panel << ' ' << res.config.detectors[d] << " auc "
                << res.curves[d].auc << "\n";
    return 0;
  }
  ExperimentConfig cfg = load_config(config_path);
  if (seed_set) cfg.seed = seed;
  if (threads > 0) cfg.threads = threads;
  DirectedGraph g = build_model_graph(cfg.graph, cfg.seed);
  SimulationResult sim = simulate(cfg, g);

  PanelResult res;
  res.panel = cfg.graph.family;
  res.config = cfg;
  res.stats = sim;
  for (size_t d = 0; d < cfg.detectors.size(); ++d)
    res.curves.push_back(roc(sim.null_stats[d], sim.alt_stats[d]));
  write_panel_outputs(outdir, res);
  std::cout.precision(6);
  for (size_t d = 0; d < cfg.detectors.size(); ++d)
    std::cout << res.panel << ' ' << cfg.detectors[d] << " auc "
              << res.curves[d].auc << "\n";
  return 0;
}

int cmd_scan_oracle(const std::string& graph_path, const std::string& y_path,
                    double rho, const DetectOptions& opts) {
  DirectedGraph g = read_edge_list_file(graph_path);
  std::vector<double> y = read_y_file(y_path, g.vertex_count());
  DetectionResult r = gss_bruteforce(g, y, rho, opts);
  std::cout.precision(6);
  std::cout << "statistic " << r.statistic << "\ncluster";
  for (int v : r.argmax_cluster.members) std::cout << ' ' << v;
  std::cout << "\nout " << r.argmax_cluster.boundary_weight << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph scan statistics toolkit"};
  app.require_subcommand(1);

  // graphgen
  GraphSpec spec;
  std::uint64_t seed = default_seed();
  std::string out_path;
  auto* gen = app.add_subcommand("graphgen", "generate a graph family");
  gen->add_option("--family", spec.family, "torus|cycle|complete|knn|epsilon")
      ->required();
  gen->add_option("--side", spec.side, "torus side length");
  gen->add_option("--n,--p", spec.n, "vertex count");
  gen->add_option("--k", spec.k, "kNN neighbor count");
  gen->add_option("--epsilon", spec.epsilon, "epsilon-graph radius");
  gen->add_option("--dim", spec.dim, "point dimension");
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("-o,--output", out_path, "edge-list output path")->required();

  // detect / scan-oracle
  std::string graph_path, y_path, method = "less", trace_path;
  double rho = 0.0;
  DetectOptions opts;
  auto* det = app.add_subcommand("detect", "run a detector on a graph signal");
  det->add_option("--graph", graph_path, "edge-list file")->required();
  det->add_option("--y", y_path, "signal file, one value per line")->required();
  det->add_option("--rho", rho, "cut budget")->required();
  det->add_option("--method", method, "gss|less|max|sum");
  det->add_option("--tol", opts.tol, "dual tolerance");
  det->add_option("--trace", trace_path, "trace CSV output path");
  det->add_option("--guard", opts.gss_guard, "gss enumeration guard");
  det->add_flag("--two-sided", opts.two_sided, "scan both y and -y (gss)");

  auto* oracle = app.add_subcommand("scan-oracle",
                                    "brute-force scan with argmax cluster");
  oracle->add_option("--graph", graph_path, "edge-list file")->required();
  oracle->add_option("--y", y_path, "signal file")->required();
  oracle->add_option("--rho", rho, "cut budget")->required();
  oracle->add_option("--guard", opts.gss_guard, "enumeration guard");
  oracle->add_flag("--two-sided", opts.two_sided, "scan both y and -y");

  // resistance
  std::string csv_path;
  auto* resist = app.add_subcommand("resistance", "effective resistances");
  resist->add_option("--graph", graph_path, "edge-list file")->required();
  resist->add_option("-o,--output", csv_path, "resistance CSV path");

  // threshold
  int p = 0;
  double alpha = 0.05, r_class = -1.0;
  auto* thr = app.add_subcommand("threshold", "type-1 control thresholds");
  thr->add_option("--p", p, "vertex count");
  thr->add_option("--rho", rho, "cut budget")->required();
  thr->add_option("--alpha", alpha, "test level");
  thr->add_option("--graph", graph_path, "graph for the resistance bound");
  thr->add_option("--r-class", r_class, "explicit r_class value");

  // simulate
  std::string config_path, panel, outdir = ".";
  int threads = 0;
  bool seed_set = false;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo ROC experiment");
  sim->add_option("--config", config_path, "experiment config file");
  sim->add_option("--panel", panel, "builtin panel: torus|knn|epsilon");
  sim->add_option("--outdir", outdir, "output directory");
  sim->add_option("--seed", seed, "master seed")->each([&](const std::string&) {
    seed_set = true;
  });
  sim->add_option("--threads", threads, "worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_graphgen(spec, seed, out_path);
    if (det->parsed())
      return cmd_detect(graph_path, y_path, rho, method, trace_path, opts);
    if (oracle->parsed()) return cmd_scan_oracle(graph_path, y_path, rho, opts);
    if (resist->parsed()) return cmd_resistance(graph_path, csv_path);
    if (thr->parsed())
      return cmd_threshold(p, rho, alpha, graph_path, r_class);
    if (sim->parsed()) {
      if (config_path.empty() && panel.empty())
        throw std::runtime_error("simulate needs --config or --panel");
      return cmd_simulate(config_path, panel, outdir, seed, seed_set, threads);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    const std::string msg = e.what();
    return msg.find("cannot open") != std::string::npos ? 2 : 1;
  }
  return 1;
}
