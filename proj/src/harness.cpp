#include "graphscan/harness.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "graphscan/rng.hpp"

namespace graphscan {

DirectedGraph build_model_graph(const GraphSpec& spec, std::uint64_t seed) {
  if (spec.family == "torus") return torus_graph(spec.side);
  if (spec.family == "cycle") return cycle_graph(spec.n);
  if (spec.family == "complete") return complete_graph(spec.n);
  if (spec.family == "knn" || spec.family == "epsilon") {
    const double eps = spec.epsilon > 0.0
                           ? spec.epsilon
                           : std::pow(static_cast<double>(spec.n), -1.0 / 3.0);
    for (int attempt = 0; attempt < 20; ++attempt) {
      PointCloud pts = sample_uniform_cloud(spec.n, spec.dim, seed + attempt);
      DirectedGraph g = spec.family == "knn" ? knn_graph(pts, spec.k)
                                             : epsilon_graph(pts, eps);
      if (g.connected()) return g;
    }
    throw std::runtime_error("geometric graph disconnected after 20 attempts");
  }
  throw std::invalid_argument("unknown graph family: " + spec.family);
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw std::runtime_error("config: bad boolean value '" + v + "'");
}

}  // namespace

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    const std::string full = section.empty() ? key : section + "." + key;

    if (full == "graph.family") cfg.graph.family = val;
    else if (full == "graph.side") cfg.graph.side = std::stoi(val);
    else if (full == "graph.n" || full == "graph.p") cfg.graph.n = std::stoi(val);
    else if (full == "graph.k") cfg.graph.k = std::stoi(val);
    else if (full == "graph.epsilon") cfg.graph.epsilon = std::stod(val);
    else if (full == "graph.dim") cfg.graph.dim = std::stoi(val);
    else if (full == "signal.mu") cfg.mu = std::stod(val);
    else if (full == "signal.cluster_size") cfg.cluster_size = std::stoi(val);
    else if (full == "signal.fixed_cluster") cfg.fixed_cluster = parse_bool(val);
    else if (full == "detect.methods") {
      cfg.detectors.clear();
      std::stringstream ss(val);
      std::string item;
      while (std::getline(ss, item, ',')) cfg.detectors.push_back(trim(item));
    } else if (full == "detect.rho") {
      if (val == "oracle") {
        cfg.rho_policy = "oracle";
      } else {
        cfg.rho_policy = "fixed";
        cfg.rho_value = std::stod(val);
      }
    } else if (full == "detect.tol") cfg.detect_opts.tol = std::stod(val);
    else if (full == "detect.two_sided") cfg.detect_opts.two_sided = parse_bool(val);
    else if (full == "detect.gss_guard") cfg.detect_opts.gss_guard = std::stoi(val);
    else if (full == "detect.max_calls_per_t")
      cfg.detect_opts.max_calls_per_t = std::stoi(val);
    else if (full == "run.trials") cfg.trials = std::stoi(val);
    else if (full == "run.alpha") cfg.alpha = std::stod(val);
    else if (full == "run.seed") cfg.seed = std::stoull(val);
    else if (full == "run.threads") cfg.threads = std::stoi(val);
    else
      throw std::runtime_error("config: unknown key '" + full + "'");
  }
  if (cfg.trials < 1) throw std::runtime_error("config: trials must be >= 1");
  if (!(cfg.mu >= 0.0)) throw std::runtime_error("config: mu must be >= 0");
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0))
    throw std::runtime_error("config: alpha must be in (0,1)");
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  return parse_config(in);
}

double statistic_for(const std::string& detector, const DirectedGraph& g,
                     const std::vector<double>& y, double rho,
                     const DetectOptions& opts) {
  if (detector == "less") return less(g, y, rho, opts).statistic;
  if (detector == "gss") return gss_bruteforce(g, y, rho, opts).statistic;
  if (detector == "max") return max_test(y);
  if (detector == "sum") return sum_test(y);
  throw std::invalid_argument("unknown detector: " + detector);
}

namespace {

// One Monte Carlo trial: draw the cluster (fresh or fixed), set rho, draw y.
double run_trial(const ExperimentConfig& cfg, const DirectedGraph& g,
                 const std::string& detector, bool alternative, int index) {
  const std::uint64_t arm = alternative ? 1 : 0;
  auto rng = make_rng(mix_seed(mix_seed(cfg.seed, arm), index));

  Cluster cluster;
  if (cfg.fixed_cluster) {
    cluster = ball_cluster(g, 0, cfg.cluster_size);
  } else {
    std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
    cluster = ball_cluster(g, pick(rng), cfg.cluster_size);
  }
  const double rho =
      cfg.rho_policy == "oracle" ? cluster.boundary_weight : cfg.rho_value;

  std::vector<double> y;
  if (alternative) {
    SignalSpec sig = make_signal(g.vertex_count(), cluster, cfg.mu);
    y = observe(sig.x, rng);
  } else {
    y = observe_null(g.vertex_count(), rng);
  }
  try {
    return statistic_for(detector, g, y, rho, cfg.detect_opts);
  } catch (const std::exception& e) {
    throw std::runtime_error("detector '" + detector + "' failed at trial " +
                             std::to_string(index) + ": " + e.what());
  }
}

}  // namespace

SimulationResult simulate(const ExperimentConfig& cfg, const DirectedGraph& g) {
  SimulationResult res;
  res.detectors = cfg.detectors;
  const int nd = static_cast<int>(cfg.detectors.size());
  res.null_stats.assign(nd, std::vector<double>(cfg.trials));
  res.alt_stats.assign(nd, std::vector<double>(cfg.trials));

  auto worker = [&](int first, int stride) {
    for (int i = first; i < cfg.trials; i += stride)
      for (int d = 0; d < nd; ++d) {
        res.null_stats[d][i] = run_trial(cfg, g, cfg.detectors[d], false, i);
        res.alt_stats[d][i] = run_trial(cfg, g, cfg.detectors[d], true, i);
      }
  };

  const int threads = std::max(1, cfg.threads);
  if (threads == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w, threads);
    for (auto& th : pool) th.join();
  }
  return res;
}

SimulationResult simulate(const ExperimentConfig& cfg) {
  return simulate(cfg, build_model_graph(cfg.graph, cfg.seed));
}

RocCurve roc(const std::vector<double>& null_stats,
             const std::vector<double>& alt_stats) {
  if (null_stats.empty() || alt_stats.empty())
    throw std::invalid_argument("roc needs nonempty samples");

  std::vector<double> pooled(null_stats);
  pooled.insert(pooled.end(), alt_stats.begin(), alt_stats.end());
  std::sort(pooled.begin(), pooled.end(), std::greater<double>());
  pooled.erase(std::unique(pooled.begin(), pooled.end()), pooled.end());

  const double n0 = static_cast<double>(null_stats.size());
  const double n1 = static_cast<double>(alt_stats.size());
  auto frac_above = [](const std::vector<double>& v, double thr) {
    int c = 0;
    for (double x : v)
      if (x > thr) ++c;
    return c;
  };

  RocCurve curve;
  curve.null_count = static_cast<int>(null_stats.size());
  curve.alt_count = static_cast<int>(alt_stats.size());
  curve.points.emplace_back(0.0, 0.0);
  for (double thr : pooled) {
    const double fpr = frac_above(null_stats, thr) / n0;
    const double tpr = frac_above(alt_stats, thr) / n1;
    if (curve.points.back() != std::make_pair(fpr, tpr))
      curve.points.emplace_back(fpr, tpr);
  }
  if (curve.points.back() != std::make_pair(1.0, 1.0))
    curve.points.emplace_back(1.0, 1.0);

  double auc = 0.0;
  for (size_t i = 1; i < curve.points.size(); ++i) {
    const auto& [x0, y0] = curve.points[i - 1];
    const auto& [x1, y1] = curve.points[i];
    auc += (x1 - x0) * (y0 + y1) / 2.0;
  }
  curve.auc = auc;
  return curve;
}

double empirical_risk(const std::vector<double>& null_stats,
                      const std::vector<double>& alt_stats, double threshold) {
  double type1 = 0.0, type2 = 0.0;
  for (double x : null_stats)
    if (x > threshold) type1 += 1.0;
  for (double x : alt_stats)
    if (x <= threshold) type2 += 1.0;
  return type1 / std::max<size_t>(1, null_stats.size()) +
         type2 / std::max<size_t>(1, alt_stats.size());
}

double type1_calibration(const DirectedGraph& g, const std::string& detector,
                         double rho, double threshold, int trials,
                         std::uint64_t seed, const DetectOptions& opts) {
  int rejections = 0;
  for (int i = 0; i < trials; ++i) {
    auto rng = make_rng(mix_seed(seed, i));
    const std::vector<double> y = observe_null(g.vertex_count(), rng);
    if (statistic_for(detector, g, y, rho, opts) > threshold) ++rejections;
  }
  return static_cast<double>(rejections) / trials;
}

PanelResult fig1_experiment(const std::string& panel, std::uint64_t seed,
                            int trials, int threads, double mu_override) {
  ExperimentConfig cfg;
  cfg.trials = trials;
  cfg.threads = threads;
  cfg.seed = seed;
  cfg.cluster_size = 15;
  if (panel == "torus") {
    cfg.graph = {"torus", 15, 225, 4, 0.0, 2};
    cfg.mu = 4.0;
  } else if (panel == "knn") {
    cfg.graph = {"knn", 15, 225, 4, 0.0, 2};
    cfg.mu = 4.0;
  } else if (panel == "epsilon") {
    cfg.graph = {"epsilon", 15, 225, 4, 0.0, 2};  // epsilon = 225^{-1/3}
    cfg.mu = 3.0;
  } else {
    throw std::invalid_argument("unknown panel: " + panel);
  }
  if (mu_override >= 0.0) cfg.mu = mu_override;

  PanelResult result;
  result.panel = panel;
  result.config = cfg;
  result.stats = simulate(cfg);
  for (size_t d = 0; d < cfg.detectors.size(); ++d)
    result.curves.push_back(
        roc(result.stats.null_stats[d], result.stats.alt_stats[d]));
  return result;
}

void write_roc_csv(std::ostream& out, const RocCurve& curve) {
  out << "fpr,tpr\n";
  out.precision(17);
  for (const auto& [fpr, tpr] : curve.points) out << fpr << ',' << tpr << '\n';
}

void write_panel_outputs(const std::string& outdir, const PanelResult& panel) {
  namespace fs = std::filesystem;
  fs::create_directories(outdir);
  for (size_t d = 0; d < panel.config.detectors.size(); ++d) {
    std::ofstream out(fs::path(outdir) / ("roc_" + panel.panel + "_" +
                                          panel.config.detectors[d] + ".csv"));
    write_roc_csv(out, panel.curves[d]);
  }

  const fs::path summary_path = fs::path(outdir) / "summary.csv";
  const bool fresh = !fs::exists(summary_path);
  std::ofstream summary(summary_path, std::ios::app);
  if (fresh) summary << "panel,detector,auc,trials,seed\n";
  summary.precision(17);
  for (size_t d = 0; d < panel.config.detectors.size(); ++d)
    summary << panel.panel << ',' << panel.config.detectors[d] << ','
            << panel.curves[d].auc << ',' << panel.config.trials << ','
            << panel.config.seed << '\n';

  std::ofstream meta(fs::path(outdir) / "metadata.txt");
  meta << "baselines: max_test and sum_test (the published SSS and UST-wavelet"
          " comparisons are external methods and are not included)\n";
}

}  // namespace graphscan
