#pragma once

#include <iosfwd>
#include <random>
#include <utility>
#include <vector>

#include "graphscan/graph.hpp"

namespace graphscan {

/// Per-arc effective resistances, computed on the symmetrized weights
/// (W + W^T)/2. r_e is symmetric across opposite arc pairs.
struct ResistanceTable {
  std::vector<double> arc_resistance;  // indexed like g.arcs()
  double residual_norm = 0.0;          // relative residual of the solve
  bool symmetrized = false;            // true when the input was asymmetric
};

/// Effective resistance between u and v: (d_u - d_v)' Lap^+ (d_u - d_v),
/// solved on the grounded Laplacian. u == v returns 0.
double effective_resistance(const DirectedGraph& g, int u, int v);

ResistanceTable resistance_table(const DirectedGraph& g);

/// Sum of W_e * r_e over boundary arcs of C (tail in C, head outside).
double boundary_resistance(const DirectedGraph& g, const ResistanceTable& table,
                           const std::vector<int>& members);

/// Upper bound rho * max_e r_e for the combinatorial class maximum r_C.
double r_class_bound(const DirectedGraph& g, const ResistanceTable& table,
                     double rho);
double r_class_bound(const DirectedGraph& g, double rho);

/// High-probability null bound for the graph scan statistic.
double gss_threshold(int p, double r_class, double alpha);

/// High-probability null bound for the Lovasz extended scan statistic.
double less_threshold(int p, double r_class, double alpha);

struct ThresholdReport {
  int p = 0;
  double rho = 0.0;
  double r_class = 0.0;
  double alpha = 0.0;
  double gss = 0.0;
  double less = 0.0;
};

ThresholdReport make_threshold_report(int p, double rho, double r_class,
                                      double alpha);
void write_threshold_report(std::ostream& out, const ThresholdReport& rep);

/// Spanning tree sampled by Wilson's loop-erased random walk from root 0;
/// transition probabilities proportional to the symmetrized weights, so the
/// tree law is proportional to the product of edge weights.
/// Returns p-1 edges as (child, parent) pairs.
std::vector<std::pair<int, int>> wilson_ust(const DirectedGraph& g,
                                            std::mt19937_64& rng);

/// CSV with columns tail,head,weight,resistance, one row per arc.
void write_resistance_csv(std::ostream& out, const DirectedGraph& g,
                          const ResistanceTable& table);

}  // namespace graphscan
