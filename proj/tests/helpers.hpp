#pragma once

// Shared fixtures for the test suite: small random connected graphs and
// brute-force reference computations.

#include <random>
#include <vector>

#include "graphscan/graph.hpp"

namespace testutil {

// Random connected undirected graph: spanning tree plus extra edges.
inline graphscan::DirectedGraph random_connected_graph(int p,
                                                       std::mt19937_64& rng,
                                                       bool weighted = false,
                                                       double extra_frac = 0.3) {
  std::vector<graphscan::Arc> edges;
  std::uniform_real_distribution<double> wdist(0.1, 2.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  auto w = [&]() { return weighted ? wdist(rng) : 1.0; };
  for (int v = 1; v < p; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    edges.push_back({pick(rng), v, w()});
  }
  for (int u = 0; u < p; ++u)
    for (int v = u + 1; v < p; ++v) {
      bool tree_edge = false;
      for (const auto& e : edges)
        if ((e.tail == u && e.head == v) || (e.tail == v && e.head == u))
          tree_edge = true;
      if (!tree_edge && unif(rng) < extra_frac) edges.push_back({u, v, w()});
    }
  return graphscan::from_undirected(p, edges);
}

inline std::vector<double> random_gaussian(int p, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> y(p);
  for (double& v : y) v = normal(rng);
  return y;
}

inline std::vector<int> mask_to_members(unsigned mask, int p) {
  std::vector<int> members;
  for (int v = 0; v < p; ++v)
    if (mask & (1u << v)) members.push_back(v);
  return members;
}

}  // namespace testutil
