#pragma once

#include <vector>

namespace graphscan {

/// Capacitated s-t network. Nodes are 0..node_count-1; capacities are
/// finite nonnegative reals.
struct FlowNetwork {
  int node_count = 0;
  int source = 0;
  int sink = 0;
  struct CapArc {
    int from;
    int to;
    double capacity;
  };
  std::vector<CapArc> arcs;
};

struct MaxFlowResult {
  double flow_value = 0.0;
  /// Source side of a minimum cut, recovered by residual reachability
  /// from s (the minimal source side; deterministic).
  std::vector<char> source_side;
  long long push_count = 0;
  long long relabel_count = 0;
};

/// Highest-label push-relabel with the gap heuristic on real capacities.
/// A solver instance owns mutable residual state and is single-use.
class MaxFlowSolver {
 public:
  explicit MaxFlowSolver(const FlowNetwork& net);
  MaxFlowResult solve();

 private:
  struct Edge {
    int to;
    int rev;       // index of the reverse edge in graph_[to]
    double cap;    // residual capacity
  };

  int n_;
  int s_;
  int t_;
  double eps_;  // residual capacities below this are treated as saturated
  std::vector<std::vector<Edge>> graph_;
  std::vector<double> excess_;
  std::vector<int> height_;
  std::vector<int> current_;
  std::vector<int> height_count_;
  long long pushes_ = 0;
  long long relabels_ = 0;

  void add_edge(int from, int to, double cap);
  void global_relabel();
};

MaxFlowResult max_flow(const FlowNetwork& net);

}  // namespace graphscan
