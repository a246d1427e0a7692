#include "graphscan/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace graphscan {

namespace {

void validate_arcs(int p, const std::vector<Arc>& arcs) {
  if (p <= 0) throw std::invalid_argument("vertex count must be positive");
  std::set<std::pair<int, int>> seen;
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.tail >= p || a.head < 0 || a.head >= p)
      throw std::invalid_argument("arc endpoint out of range");
    if (a.tail == a.head)
      throw std::invalid_argument("self-loop rejected");
    if (!(a.weight > 0.0) || !std::isfinite(a.weight))
      throw std::invalid_argument("arc weight must be strictly positive");
    if (!seen.emplace(a.tail, a.head).second)
      throw std::invalid_argument("duplicate arc (" + std::to_string(a.tail) +
                                  "," + std::to_string(a.head) + ") rejected");
  }
}

}  // namespace

void DirectedGraph::finalize() {
  adj_.assign(p_, {});
  min_weight_ = arcs_.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  for (int e = 0; e < static_cast<int>(arcs_.size()); ++e) {
    adj_[arcs_[e].tail].push_back(e);
    min_weight_ = std::min(min_weight_, arcs_[e].weight);
  }
  if (arcs_.empty()) min_weight_ = 0.0;

  // connectivity of the undirected skeleton
  std::vector<std::vector<int>> und(p_);
  for (const Arc& a : arcs_) {
    und[a.tail].push_back(a.head);
    und[a.head].push_back(a.tail);
  }
  std::vector<char> vis(p_, 0);
  std::vector<int> stack{0};
  vis[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : und[v])
      if (!vis[w]) {
        vis[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  connected_ = (count == p_);
}

double DirectedGraph::max_cut_upper_bound() const {
  double s = 0.0;
  for (const Arc& a : arcs_) s += a.weight;
  return s;
}

DirectedGraph build_graph(int p, const std::vector<Arc>& arcs) {
  validate_arcs(p, arcs);
  DirectedGraph g;
  g.p_ = p;
  g.arcs_ = arcs;
  g.finalize();
  return g;
}

DirectedGraph from_undirected(int p, const std::vector<Arc>& edges) {
  std::vector<Arc> arcs;
  arcs.reserve(edges.size() * 2);
  for (const Arc& e : edges) {
    arcs.push_back({e.tail, e.head, e.weight});
    arcs.push_back({e.head, e.tail, e.weight});
  }
  validate_arcs(p, arcs);
  DirectedGraph g;
  g.p_ = p;
  g.arcs_ = std::move(arcs);
  g.undirected_ = true;
  g.finalize();
  return g;
}

double out_weight_mask(const DirectedGraph& g, const std::vector<char>& in_set) {
  if (static_cast<int>(in_set.size()) != g.vertex_count())
    throw std::invalid_argument("membership mask length mismatch");
  double s = 0.0;
  for (const Arc& a : g.arcs())
    if (in_set[a.tail] && !in_set[a.head]) s += a.weight;
  return s;
}

double out_weight(const DirectedGraph& g, const std::vector<int>& members) {
  std::vector<char> mask(g.vertex_count(), 0);
  for (int v : members) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("cluster member out of range");
    mask[v] = 1;
  }
  return out_weight_mask(g, mask);
}

Cluster make_cluster(const DirectedGraph& g, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Cluster c;
  c.boundary_weight = out_weight(g, members);
  c.members = std::move(members);
  return c;
}

DirectedGraph read_edge_list(std::istream& in) {
  int p = 0, m = 0;
  std::string kind;
  if (!(in >> p >> m >> kind))
    throw std::runtime_error("edge list: bad header");
  std::vector<Arc> rows(m);
  for (int i = 0; i < m; ++i)
    if (!(in >> rows[i].tail >> rows[i].head >> rows[i].weight))
      throw std::runtime_error("edge list: truncated at row " + std::to_string(i));
  if (kind == "undirected") return from_undirected(p, rows);
  if (kind == "directed") return build_graph(p, rows);
  throw std::runtime_error("edge list: kind must be directed|undirected");
}

DirectedGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const DirectedGraph& g) {
  const bool und = g.undirected_encoding();
  out << g.vertex_count() << ' ' << g.edge_count() << ' '
      << (und ? "undirected" : "directed") << '\n';
  out.precision(17);
  for (const Arc& a : g.arcs()) {
    if (und && a.tail > a.head) continue;  // one row per undirected edge
    out << a.tail << ' ' << a.head << ' ' << a.weight << '\n';
  }
}

void write_edge_list_file(const std::string& path, const DirectedGraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file: " + path);
  write_edge_list(out, g);
}

}  // namespace graphscan
