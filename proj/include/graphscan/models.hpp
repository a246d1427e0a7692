#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "graphscan/graph.hpp"

namespace graphscan {

/// Points drawn i.i.d. uniform on the unit cube [0,1]^dim.
struct PointCloud {
  int dim = 2;
  std::vector<double> coords;  // row-major, n x dim
  std::uint64_t seed = 0;

  int size() const { return dim ? static_cast<int>(coords.size()) / dim : 0; }
  double coord(int i, int d) const { return coords[i * dim + d]; }
};

PointCloud sample_uniform_cloud(int n, int dim, std::uint64_t seed);
void write_cloud_csv(std::ostream& out, const PointCloud& pts);

/// side x side 4-regular wraparound lattice, unit weights. side = 2
/// degenerates: wraparound duplicates collapse to weight-2 edges.
DirectedGraph torus_graph(int side);
DirectedGraph cycle_graph(int p);
DirectedGraph complete_graph(int p);

/// Symmetric kNN graph: i ~ j if either is among the other's k nearest
/// neighbors (ties broken by index). Connectivity is flagged on the result.
DirectedGraph knn_graph(const PointCloud& pts, int k);

/// i ~ j if ||z_i - z_j|| <= epsilon.
DirectedGraph epsilon_graph(const PointCloud& pts, double epsilon);

/// Breadth-first ball from seed_vertex truncated at target_size; frontier
/// truncation by ascending vertex id. The induced subgraph is connected.
Cluster ball_cluster(const DirectedGraph& g, int seed_vertex, int target_size);

/// Activation pattern x = (mu / sqrt(|C|)) 1_C, so ||x|| = mu.
struct SignalSpec {
  double mu = 0.0;
  Cluster cluster;
  std::vector<double> x;
};

SignalSpec make_signal(int p, const Cluster& c, double mu);

/// y = x + standard normal noise from the given stream.
std::vector<double> observe(const std::vector<double>& x, std::mt19937_64& rng);
std::vector<double> observe_null(int p, std::mt19937_64& rng);

}  // namespace graphscan
