#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace graphscan {

struct Arc {
  int tail;
  int head;
  double weight;
};

/// Immutable weighted arc structure shared by cuts, flows and resistances.
/// Undirected inputs are encoded as opposite arc pairs of equal weight, so
/// out_weight() coincides with the classical undirected cut weight.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  int vertex_count() const { return p_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(int e) const { return arcs_[e]; }
  bool connected() const { return connected_; }
  bool undirected_encoding() const { return undirected_; }
  /// Number of undirected edges when built by from_undirected, else arc count.
  int edge_count() const { return undirected_ ? arc_count() / 2 : arc_count(); }

  /// Out-arc indices of a vertex.
  const std::vector<int>& out_arcs(int v) const { return adj_[v]; }

  double min_weight() const { return min_weight_; }
  double max_cut_upper_bound() const;  // sum of all arc weights

  friend DirectedGraph build_graph(int p, const std::vector<Arc>& arcs);
  friend DirectedGraph from_undirected(int p, const std::vector<Arc>& edges);

 private:
  int p_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adj_;
  bool connected_ = false;
  bool undirected_ = false;
  double min_weight_ = 0.0;

  void finalize();
};

/// Validates ids, weights, self-loops and duplicate arcs; computes the
/// connectivity flag on the undirected skeleton.
DirectedGraph build_graph(int p, const std::vector<Arc>& arcs);

/// Each undirected edge {u,v} becomes the arc pair (u,v),(v,u) of equal weight.
DirectedGraph from_undirected(int p, const std::vector<Arc>& edges);

/// out(C) = sum of W_e over arcs with tail in C and head outside C.
double out_weight(const DirectedGraph& g, const std::vector<int>& members);
double out_weight_mask(const DirectedGraph& g, const std::vector<char>& in_set);

/// Vertex subset with its cached boundary weight.
struct Cluster {
  std::vector<int> members;       // sorted, deduplicated
  double boundary_weight = 0.0;   // out_weight(G, members)
};

Cluster make_cluster(const DirectedGraph& g, std::vector<int> members);

// Edge-list text format: "p m directed|undirected" header, then one
// "tail head weight" triple per line, 0-based ids.
DirectedGraph read_edge_list(std::istream& in);
DirectedGraph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const DirectedGraph& g);
void write_edge_list_file(const std::string& path, const DirectedGraph& g);

}  // namespace graphscan
