#include "graphscan/mrf.hpp"

#include <cmath>
#include <stdexcept>

namespace graphscan {

CutSolution mrf_map(const DirectedGraph& g, const std::vector<double>& theta,
                    double eta1) {
  const int p = g.vertex_count();
  if (static_cast<int>(theta.size()) != p)
    throw std::invalid_argument("theta length mismatch");
  if (!(eta1 >= 0.0)) throw std::invalid_argument("eta1 must be nonnegative");

  // Graph-representable form: vertex i is node i, source p, sink p+1.
  //   theta_i < 0: arc s->i with capacity -theta_i
  //   theta_i > 0: arc i->t with capacity theta_i
  //   graph arc (u,v,W): arc u->v with capacity eta1*W
  // Then E(x) = min-cut + sum_i min(theta_i, 0).
  FlowNetwork net;
  net.node_count = p + 2;
  net.source = p;
  net.sink = p + 1;
  double base = 0.0;
  for (int i = 0; i < p; ++i) {
    if (theta[i] < 0.0) {
      net.arcs.push_back({net.source, i, -theta[i]});
      base += theta[i];
    } else if (theta[i] > 0.0) {
      net.arcs.push_back({i, net.sink, theta[i]});
    }
  }
  if (eta1 > 0.0)
    for (const Arc& a : g.arcs())
      net.arcs.push_back({a.tail, a.head, eta1 * a.weight});

  MaxFlowResult mf = max_flow(net);

  CutSolution sol;
  sol.x.assign(mf.source_side.begin(), mf.source_side.begin() + p);
  sol.flow_value = mf.flow_value;
  sol.push_count = mf.push_count;
  // recompute the energy exactly from x
  double energy = 0.0;
  for (int i = 0; i < p; ++i)
    if (sol.x[i]) energy += theta[i];
  energy += eta1 * out_weight_mask(g, sol.x);
  sol.objective = energy;
  (void)base;
  return sol;
}

DualValue g_dual(const DirectedGraph& g, const std::vector<double>& y,
                 double eta0, double eta1) {
  const int p = g.vertex_count();
  if (static_cast<int>(y.size()) != p)
    throw std::invalid_argument("y length mismatch");
  if (!(eta0 >= 0.0) || !(eta1 >= 0.0))
    throw std::invalid_argument("dual point must be nonnegative");

  std::vector<double> theta(p);
  for (int i = 0; i < p; ++i) theta[i] = eta0 - y[i];
  CutSolution sol = mrf_map(g, theta, eta1);

  DualValue dv;
  dv.x_star = std::move(sol.x);
  for (int i = 0; i < p; ++i)
    if (dv.x_star[i]) dv.x_sum += 1.0;
  dv.x_out = out_weight_mask(g, dv.x_star);
  double value = -dv.x_sum * eta0 - dv.x_out * eta1;
  for (int i = 0; i < p; ++i)
    if (dv.x_star[i]) value += y[i];
  dv.value = value;
  return dv;
}

}  // namespace graphscan
