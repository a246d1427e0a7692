#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "graphscan/detect.hpp"
#include "graphscan/graph.hpp"
#include "graphscan/models.hpp"

namespace graphscan {

struct GraphSpec {
  std::string family = "torus";  // torus | cycle | complete | knn | epsilon
  int side = 15;
  int n = 225;     // vertex count for cycle/complete/knn/epsilon
  int k = 4;
  double epsilon = 0.0;  // 0 means the default n^{-1/3}
  int dim = 2;
};

/// Builds the requested graph family. Geometric families regenerate the
/// point cloud with the next seed on disconnection, up to 20 attempts.
DirectedGraph build_model_graph(const GraphSpec& spec, std::uint64_t seed);

struct ExperimentConfig {
  GraphSpec graph;
  double mu = 4.0;
  int cluster_size = 15;
  bool fixed_cluster = false;  // reuse the ball from vertex 0 on every trial
  std::string rho_policy = "oracle";  // oracle = out(C) of the drawn cluster
  double rho_value = 0.0;             // used when rho_policy == "fixed"
  std::vector<std::string> detectors{"less", "max", "sum"};
  int trials = 200;  // per hypothesis
  double alpha = 0.05;
  std::uint64_t seed = 1;
  DetectOptions detect_opts;
  int threads = 1;
};

/// Key-value config with [graph] [signal] [detect] [run] sections.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);

struct SimulationResult {
  std::vector<std::string> detectors;
  std::vector<std::vector<double>> null_stats;  // [detector][trial]
  std::vector<std::vector<double>> alt_stats;
};

/// Monte Carlo draws from H0 and H1. Per-trial seeds derive from
/// (master seed, arm, trial index), so output is identical for any thread
/// count.
SimulationResult simulate(const ExperimentConfig& config,
                          const DirectedGraph& g);
SimulationResult simulate(const ExperimentConfig& config);

struct RocCurve {
  std::vector<std::pair<double, double>> points;  // (fpr, tpr), monotone
  double auc = 0.0;
  int null_count = 0;
  int alt_count = 0;
};

/// Threshold sweep over the pooled values, ties grouped, trapezoidal AUC.
RocCurve roc(const std::vector<double>& null_stats,
             const std::vector<double>& alt_stats);

/// Fraction of null samples above the threshold plus fraction of alternative
/// samples at or below it.
double empirical_risk(const std::vector<double>& null_stats,
                      const std::vector<double>& alt_stats, double threshold);

/// Empirical null rejection rate of a detector at a fixed threshold.
double type1_calibration(const DirectedGraph& g, const std::string& detector,
                         double rho, double threshold, int trials,
                         std::uint64_t seed, const DetectOptions& opts = {});

struct PanelResult {
  std::string panel;
  ExperimentConfig config;
  SimulationResult stats;
  std::vector<RocCurve> curves;  // aligned with config.detectors
};

/// Desk-scale ROC benchmark on one graph family: LESS against the max and
/// sum baselines at p = 225, |C| = 15, mu = 4 (torus, knn) or 3 (epsilon).
PanelResult fig1_experiment(const std::string& panel, std::uint64_t seed,
                            int trials = 200, int threads = 1,
                            double mu_override = -1.0);

void write_roc_csv(std::ostream& out, const RocCurve& curve);
/// roc_<panel>_<detector>.csv files plus summary.csv and metadata.txt.
void write_panel_outputs(const std::string& outdir, const PanelResult& panel);

double statistic_for(const std::string& detector, const DirectedGraph& g,
                     const std::vector<double>& y, double rho,
                     const DetectOptions& opts);

}  // namespace graphscan
