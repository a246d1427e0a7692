#include "graphscan/lovasz.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace graphscan {

std::vector<double> signed_incidence_image(const DirectedGraph& g,
                                           const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != g.vertex_count())
    throw std::invalid_argument("vector length mismatch");
  std::vector<double> z(g.arc_count());
  for (int e = 0; e < g.arc_count(); ++e) {
    const Arc& a = g.arc(e);
    z[e] = a.weight * (x[a.tail] - x[a.head]);
  }
  return z;
}

double lovasz_out(const DirectedGraph& g, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != g.vertex_count())
    throw std::invalid_argument("vector length mismatch");
  double s = 0.0;
  for (const Arc& a : g.arcs()) {
    double d = x[a.tail] - x[a.head];
    if (d > 0.0) s += a.weight * d;
  }
  return s;
}

double lovasz_extension_generic(
    const std::function<double(const std::vector<char>&)>& set_fn,
    const std::vector<double>& x) {
  const int p = static_cast<int>(x.size());
  std::vector<int> order(p);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return x[a] > x[b]; });

  std::vector<char> prefix(p, 0);
  double value = 0.0;
  double prev_f = 0.0;  // F(empty) contributes nothing to the telescoping sum
  for (int i = 0; i < p; ++i) {
    prefix[order[i]] = 1;
    double f = set_fn(prefix);
    value += (f - prev_f) * x[order[i]];
    prev_f = f;
  }
  return value;
}

}  // namespace graphscan
