#include "graphscan/electrical.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>

namespace graphscan {

namespace {

// Symmetrized conductances: c(u,v) = (W_{u,v} + W_{v,u}) / 2 summed per
// unordered pair. For undirected encodings this is the original edge weight.
std::map<std::pair<int, int>, double> symmetrized_conductances(
    const DirectedGraph& g, bool* was_asymmetric) {
  std::map<std::pair<int, int>, double> dirw;
  for (const Arc& a : g.arcs()) dirw[{a.tail, a.head}] += a.weight;
  std::map<std::pair<int, int>, double> cond;
  bool asym = false;
  for (const auto& [key, w] : dirw) {
    auto [u, v] = key;
    auto it = dirw.find({v, u});
    const double wrev = (it == dirw.end()) ? 0.0 : it->second;
    if (std::abs(w - wrev) > 0.0) asym = true;
    if (u < v) cond[{u, v}] = (w + wrev) / 2.0;
    else if (it == dirw.end()) cond[{v, u}] = w / 2.0;
  }
  if (was_asymmetric) *was_asymmetric = asym;
  return cond;
}

// Grounded Laplacian (vertex 0 removed) of the symmetrized graph.
Eigen::MatrixXd grounded_laplacian(const DirectedGraph& g,
                                   bool* was_asymmetric) {
  const int p = g.vertex_count();
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(p, p);
  for (const auto& [key, c] : symmetrized_conductances(g, was_asymmetric)) {
    auto [u, v] = key;
    lap(u, u) += c;
    lap(v, v) += c;
    lap(u, v) -= c;
    lap(v, u) -= c;
  }
  return lap.bottomRightCorner(p - 1, p - 1);
}

void require_connected(const DirectedGraph& g) {
  if (!g.connected())
    throw std::invalid_argument(
        "effective resistance requires a connected graph");
}

}  // namespace

double effective_resistance(const DirectedGraph& g, int u, int v) {
  const int p = g.vertex_count();
  if (u < 0 || u >= p || v < 0 || v >= p)
    throw std::invalid_argument("vertex out of range");
  if (u == v) return 0.0;
  require_connected(g);

  Eigen::MatrixXd lg = grounded_laplacian(g, nullptr);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(p - 1);
  if (u > 0) b(u - 1) = 1.0;
  if (v > 0) b(v - 1) = -1.0;
  Eigen::VectorXd z = lg.ldlt().solve(b);
  const double residual = (lg * z - b).norm() / b.norm();
  if (residual > 1e-9)
    throw std::runtime_error("Laplacian solve did not converge");
  const double zu = (u > 0) ? z(u - 1) : 0.0;
  const double zv = (v > 0) ? z(v - 1) : 0.0;
  return zu - zv;
}

ResistanceTable resistance_table(const DirectedGraph& g) {
  require_connected(g);
  const int p = g.vertex_count();
  ResistanceTable table;
  if (p == 1) return table;

  Eigen::MatrixXd lg = grounded_laplacian(g, &table.symmetrized);
  Eigen::MatrixXd inv = lg.ldlt().solve(Eigen::MatrixXd::Identity(p - 1, p - 1));
  table.residual_norm =
      (lg * inv - Eigen::MatrixXd::Identity(p - 1, p - 1)).norm() /
      std::sqrt(static_cast<double>(p - 1));

  auto entry = [&](int a, int b) -> double {
    if (a == 0 || b == 0) return 0.0;
    return inv(a - 1, b - 1);
  };
  table.arc_resistance.resize(g.arc_count());
  for (int e = 0; e < g.arc_count(); ++e) {
    const Arc& a = g.arc(e);
    table.arc_resistance[e] =
        entry(a.tail, a.tail) + entry(a.head, a.head) - 2.0 * entry(a.tail, a.head);
  }
  return table;
}

double boundary_resistance(const DirectedGraph& g, const ResistanceTable& table,
                           const std::vector<int>& members) {
  std::vector<char> mask(g.vertex_count(), 0);
  for (int v : members) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("cluster member out of range");
    mask[v] = 1;
  }
  double s = 0.0;
  for (int e = 0; e < g.arc_count(); ++e) {
    const Arc& a = g.arc(e);
    if (mask[a.tail] && !mask[a.head])
      s += a.weight * table.arc_resistance[e];
  }
  return s;
}

double r_class_bound(const DirectedGraph& g, const ResistanceTable& table,
                     double rho) {
  if (!(rho >= 0.0)) throw std::invalid_argument("rho must be nonnegative");
  double rmax = 0.0;
  for (double r : table.arc_resistance) rmax = std::max(rmax, r);
  (void)g;
  return rho * rmax;
}

double r_class_bound(const DirectedGraph& g, double rho) {
  return r_class_bound(g, resistance_table(g), rho);
}

double gss_threshold(int p, double r_class, double alpha) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  if (!(r_class >= 0.0)) throw std::invalid_argument("r_class must be >= 0");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha must be in (0,1)");
  const double logp = std::log(static_cast<double>(p));
  return (std::sqrt(r_class) + std::sqrt(0.5 * logp)) *
             std::sqrt(2.0 * std::log(static_cast<double>(p - 1))) +
         std::sqrt(2.0 * std::log(2.0)) + std::sqrt(2.0 * std::log(1.0 / alpha));
}

double less_threshold(int p, double r_class, double alpha) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  if (!(r_class >= 0.0)) throw std::invalid_argument("r_class must be >= 0");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha must be in (0,1)");
  const double logp = std::log(static_cast<double>(p));
  const double r = std::pow(std::sqrt(r_class) + std::sqrt(0.5 * logp), 2);
  const double rlogp = std::sqrt(r * logp);
  return (std::log(2.0 * p) + 1.0) / rlogp + 2.0 * rlogp +
         std::sqrt(2.0 * logp) + std::sqrt(2.0 * std::log(1.0 / alpha));
}

ThresholdReport make_threshold_report(int p, double rho, double r_class,
                                      double alpha) {
  ThresholdReport rep;
  rep.p = p;
  rep.rho = rho;
  rep.r_class = r_class;
  rep.alpha = alpha;
  rep.gss = gss_threshold(p, r_class, alpha);
  rep.less = less_threshold(p, r_class, alpha);
  return rep;
}

void write_threshold_report(std::ostream& out, const ThresholdReport& rep) {
  out << "p " << rep.p << "\n"
      << "rho " << rep.rho << "\n"
      << "r_class " << rep.r_class << "\n"
      << "alpha " << rep.alpha << "\n"
      << "gss_threshold " << rep.gss << "\n"
      << "less_threshold " << rep.less << "\n";
}

std::vector<std::pair<int, int>> wilson_ust(const DirectedGraph& g,
                                            std::mt19937_64& rng) {
  require_connected(g);
  const int p = g.vertex_count();

  // symmetrized weighted adjacency for the random-walk law
  std::vector<std::vector<std::pair<int, double>>> nbrs(p);
  for (const auto& [key, c] : symmetrized_conductances(g, nullptr)) {
    auto [u, v] = key;
    nbrs[u].emplace_back(v, c);
    nbrs[v].emplace_back(u, c);
  }
  std::vector<double> total(p, 0.0);
  for (int v = 0; v < p; ++v)
    for (auto& [w, c] : nbrs[v]) total[v] += c;

  auto step = [&](int v) {
    std::uniform_real_distribution<double> unif(0.0, total[v]);
    double x = unif(rng);
    for (auto& [w, c] : nbrs[v]) {
      if (x < c) return w;
      x -= c;
    }
    return nbrs[v].back().first;
  };

  std::vector<char> in_tree(p, 0);
  std::vector<int> next(p, -1);
  in_tree[0] = 1;  // fixed root
  for (int start = 1; start < p; ++start) {
    if (in_tree[start]) continue;
    int v = start;
    while (!in_tree[v]) {
      next[v] = step(v);
      v = next[v];
    }
    v = start;
    while (!in_tree[v]) {  // retain the loop-erased path
      in_tree[v] = 1;
      v = next[v];
    }
  }

  std::vector<std::pair<int, int>> edges;
  edges.reserve(p - 1);
  for (int v = 1; v < p; ++v) edges.emplace_back(v, next[v]);
  return edges;
}

void write_resistance_csv(std::ostream& out, const DirectedGraph& g,
                          const ResistanceTable& table) {
  out << "tail,head,weight,resistance\n";
  out.precision(17);
  for (int e = 0; e < g.arc_count(); ++e) {
    const Arc& a = g.arc(e);
    out << a.tail << ',' << a.head << ',' << a.weight << ','
        << table.arc_resistance[e] << '\n';
  }
}

}  // namespace graphscan
