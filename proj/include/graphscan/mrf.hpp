#pragma once

#include <vector>

#include "graphscan/graph.hpp"
#include "graphscan/maxflow.hpp"

namespace graphscan {

/// Binary minimizer returned by a min-cut call, with its exact energy
/// recomputed from x.
struct CutSolution {
  std::vector<char> x;       // length p
  double objective = 0.0;    // sum theta_i x_i + eta1 * out(x)
  double flow_value = 0.0;
  long long push_count = 0;
};

/// Minimizes E(x) = sum_i theta_i x_i + eta1 * out(x) over binary x by a
/// single s-t min cut. Ties are resolved to the minimal source side.
CutSolution mrf_map(const DirectedGraph& g, const std::vector<double>& theta,
                    double eta1);

struct DualValue {
  double value = 0.0;        // g(eta0, eta1) = max_x y'x - eta0 1'x - eta1 out(x)
  std::vector<char> x_star;  // attaining binary vector
  double x_sum = 0.0;        // 1'x*
  double x_out = 0.0;        // out(x*)
};

/// Evaluates the LESS dual function via one MRF MAP call with
/// theta_i = eta0 - y_i. Always >= 0 (x = 0 is feasible).
DualValue g_dual(const DirectedGraph& g, const std::vector<double>& y,
                 double eta0, double eta1);

}  // namespace graphscan
