#include "graphscan/models.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#include "graphscan/rng.hpp"

namespace graphscan {

PointCloud sample_uniform_cloud(int n, int dim, std::uint64_t seed) {
  if (n < 2 || dim < 1) throw std::invalid_argument("need n >= 2, dim >= 1");
  PointCloud pts;
  pts.dim = dim;
  pts.seed = seed;
  pts.coords.resize(static_cast<size_t>(n) * dim);
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (double& c : pts.coords) c = unif(rng);
  return pts;
}

void write_cloud_csv(std::ostream& out, const PointCloud& pts) {
  out.precision(17);
  for (int i = 0; i < pts.size(); ++i) {
    for (int d = 0; d < pts.dim; ++d)
      out << (d ? "," : "") << pts.coord(i, d);
    out << '\n';
  }
}

DirectedGraph torus_graph(int side) {
  if (side < 2) throw std::invalid_argument("torus side must be >= 2");
  const int p = side * side;
  auto id = [side](int r, int c) {
    return ((r % side + side) % side) * side + ((c % side + side) % side);
  };
  std::map<std::pair<int, int>, double> edges;  // collapses side=2 duplicates
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      const int v = id(r, c);
      for (int w : {id(r, c + 1), id(r + 1, c)}) {
        edges[{std::min(v, w), std::max(v, w)}] += 1.0;
      }
    }
  }
  std::vector<Arc> rows;
  rows.reserve(edges.size());
  for (const auto& [key, w] : edges) rows.push_back({key.first, key.second, w});
  return from_undirected(p, rows);
}

DirectedGraph cycle_graph(int p) {
  if (p < 3) throw std::invalid_argument("cycle needs p >= 3");
  std::vector<Arc> rows;
  for (int v = 0; v < p; ++v) rows.push_back({v, (v + 1) % p, 1.0});
  return from_undirected(p, rows);
}

DirectedGraph complete_graph(int p) {
  if (p < 2) throw std::invalid_argument("complete graph needs p >= 2");
  std::vector<Arc> rows;
  for (int u = 0; u < p; ++u)
    for (int v = u + 1; v < p; ++v) rows.push_back({u, v, 1.0});
  return from_undirected(p, rows);
}

namespace {

double sq_dist(const PointCloud& pts, int i, int j) {
  double s = 0.0;
  for (int d = 0; d < pts.dim; ++d) {
    const double diff = pts.coord(i, d) - pts.coord(j, d);
    s += diff * diff;
  }
  return s;
}

}  // namespace

DirectedGraph knn_graph(const PointCloud& pts, int k) {
  const int n = pts.size();
  if (k < 1 || k >= n) throw std::invalid_argument("need 1 <= k < n");

  std::vector<std::pair<double, int>> dist(n - 1);
  std::set<std::pair<int, int>> seen;
  std::vector<Arc> rows;
  for (int i = 0; i < n; ++i) {
    dist.clear();
    for (int j = 0; j < n; ++j)
      if (j != i) dist.emplace_back(sq_dist(pts, i, j), j);
    std::nth_element(dist.begin(), dist.begin() + (k - 1), dist.end());
    std::sort(dist.begin(), dist.begin() + k);  // deterministic tie handling
    for (int r = 0; r < k; ++r) {
      const int j = dist[r].second;
      auto key = std::minmax(i, j);
      if (seen.emplace(key.first, key.second).second)
        rows.push_back({key.first, key.second, 1.0});
    }
  }
  return from_undirected(n, rows);
}

DirectedGraph epsilon_graph(const PointCloud& pts, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  const int n = pts.size();
  const double e2 = epsilon * epsilon;
  std::vector<Arc> rows;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (sq_dist(pts, i, j) <= e2) rows.push_back({i, j, 1.0});
  return from_undirected(n, rows);
}

Cluster ball_cluster(const DirectedGraph& g, int seed_vertex, int target_size) {
  const int p = g.vertex_count();
  if (seed_vertex < 0 || seed_vertex >= p)
    throw std::invalid_argument("seed vertex out of range");
  if (target_size < 1 || target_size > p)
    throw std::invalid_argument("target size out of range");

  std::vector<char> visited(p, 0);
  std::vector<int> members{seed_vertex};
  visited[seed_vertex] = 1;
  std::vector<int> frontier{seed_vertex};
  while (static_cast<int>(members.size()) < target_size && !frontier.empty()) {
    std::vector<int> next;
    for (int v : frontier)
      for (int e : g.out_arcs(v)) {
        const int w = g.arc(e).head;
        if (!visited[w]) {
          visited[w] = 1;
          next.push_back(w);
        }
      }
    std::sort(next.begin(), next.end());
    for (int w : next) {
      if (static_cast<int>(members.size()) >= target_size) break;
      members.push_back(w);
    }
    frontier = std::move(next);
  }
  return make_cluster(g, std::move(members));
}

SignalSpec make_signal(int p, const Cluster& c, double mu) {
  if (!(mu >= 0.0)) throw std::invalid_argument("mu must be nonnegative");
  SignalSpec spec;
  spec.mu = mu;
  spec.cluster = c;
  spec.x.assign(p, 0.0);
  if (!c.members.empty()) {
    const double level = mu / std::sqrt(static_cast<double>(c.members.size()));
    for (int v : c.members) spec.x[v] = level;
  }
  return spec;
}

std::vector<double> observe(const std::vector<double>& x,
                            std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> y(x.size());
  for (size_t i = 0; i < x.size(); ++i) y[i] = x[i] + normal(rng);
  return y;
}

std::vector<double> observe_null(int p, std::mt19937_64& rng) {
  return observe(std::vector<double>(p, 0.0), rng);
}

}  // namespace graphscan
