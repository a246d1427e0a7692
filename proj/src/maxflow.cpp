#include "graphscan/maxflow.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace graphscan {

MaxFlowSolver::MaxFlowSolver(const FlowNetwork& net)
    : n_(net.node_count), s_(net.source), t_(net.sink) {
  if (n_ < 2 || s_ == t_ || s_ < 0 || s_ >= n_ || t_ < 0 || t_ >= n_)
    throw std::invalid_argument("invalid flow network terminals");
  graph_.assign(n_, {});
  double total = 0.0;
  for (const auto& a : net.arcs) {
    if (a.from < 0 || a.from >= n_ || a.to < 0 || a.to >= n_ || a.from == a.to)
      throw std::invalid_argument("invalid flow arc");
    if (!(a.capacity >= 0.0) || !std::isfinite(a.capacity))
      throw std::invalid_argument("capacity must be finite and nonnegative");
    total += a.capacity;
    if (a.capacity > 0.0) add_edge(a.from, a.to, a.capacity);
  }
  eps_ = 1e-12 * std::max(1.0, total);
  excess_.assign(n_, 0.0);
  height_.assign(n_, 0);
  current_.assign(n_, 0);
  height_count_.assign(2 * n_ + 1, 0);
}

void MaxFlowSolver::add_edge(int from, int to, double cap) {
  graph_[from].push_back({to, static_cast<int>(graph_[to].size()), cap});
  graph_[to].push_back({from, static_cast<int>(graph_[from].size()) - 1, 0.0});
}

// Exact heights: distance to t in the residual graph, or n + distance to s
// for nodes that cannot reach t.
void MaxFlowSolver::global_relabel() {
  std::fill(height_.begin(), height_.end(), 2 * n_);
  std::fill(height_count_.begin(), height_count_.end(), 0);
  std::deque<int> q;

  auto bfs_from = [&](int root, int base) {
    height_[root] = base;
    q.push_back(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (const Edge& e : graph_[u]) {
        // residual arc (e.to -> u)
        if (graph_[e.to][e.rev].cap > eps_ && height_[e.to] == 2 * n_ &&
            e.to != s_) {
          height_[e.to] = height_[u] + 1;
          q.push_back(e.to);
        }
      }
    }
  };

  bfs_from(t_, 0);
  int ht_s = height_[s_];
  height_[s_] = n_;
  bfs_from(s_, n_);
  (void)ht_s;
  for (int v = 0; v < n_; ++v) {
    if (height_[v] > 2 * n_) height_[v] = 2 * n_;
    ++height_count_[height_[v]];
    current_[v] = 0;
  }
}

MaxFlowResult MaxFlowSolver::solve() {
  // saturate source arcs
  for (Edge& e : graph_[s_]) {
    if (e.cap > eps_) {
      excess_[e.to] += e.cap;
      graph_[e.to][e.rev].cap += e.cap;
      e.cap = 0.0;
    }
  }
  global_relabel();

  std::vector<std::vector<int>> bucket(2 * n_ + 1);
  int highest = 0;
  auto activate = [&](int v) {
    if (v != s_ && v != t_ && excess_[v] > eps_) {
      bucket[height_[v]].push_back(v);
      highest = std::max(highest, height_[v]);
    }
  };
  for (int v = 0; v < n_; ++v) activate(v);

  long long relabels_since_update = 0;
  while (highest >= 0) {
    if (bucket[highest].empty()) {
      --highest;
      continue;
    }
    int v = bucket[highest].back();
    bucket[highest].pop_back();
    if (v == s_ || v == t_ || excess_[v] <= eps_ || height_[v] != highest)
      continue;  // stale entry

    // discharge v
    while (excess_[v] > eps_) {
      if (current_[v] == static_cast<int>(graph_[v].size())) {
        // relabel
        int old = height_[v];
        int best = 2 * n_;
        for (const Edge& e : graph_[v])
          if (e.cap > eps_) best = std::min(best, height_[e.to] + 1);
        height_[v] = best;
        ++relabels_;
        ++relabels_since_update;
        current_[v] = 0;
        --height_count_[old];
        ++height_count_[height_[v]];
        // gap heuristic: heights strictly between a gap and n are dead
        if (old < n_ && height_count_[old] == 0) {
          for (int u = 0; u < n_; ++u) {
            if (u != s_ && height_[u] > old && height_[u] < n_) {
              --height_count_[height_[u]];
              height_[u] = n_ + 1;
              ++height_count_[height_[u]];
            }
          }
        }
        if (height_[v] >= 2 * n_) {
          height_[v] = 2 * n_;
          break;  // nowhere to push
        }
        if (relabels_since_update > 4LL * n_) {
          relabels_since_update = 0;
          global_relabel();
          for (auto& b : bucket) b.clear();
          highest = 0;
          for (int u = 0; u < n_; ++u) activate(u);
          break;
        }
        continue;
      }
      Edge& e = graph_[v][current_[v]];
      if (e.cap > eps_ && height_[v] == height_[e.to] + 1) {
        double delta = std::min(excess_[v], e.cap);
        e.cap -= delta;
        graph_[e.to][e.rev].cap += delta;
        excess_[v] -= delta;
        excess_[e.to] += delta;
        ++pushes_;
        activate(e.to);
      } else {
        ++current_[v];
      }
    }
    activate(v);
    highest = std::max(highest, height_[v]);
  }

  MaxFlowResult res;
  res.flow_value = excess_[t_];
  res.push_count = pushes_;
  res.relabel_count = relabels_;

  // minimal source side: residual reachability from s
  res.source_side.assign(n_, 0);
  std::deque<int> q{s_};
  res.source_side[s_] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (const Edge& e : graph_[u])
      if (e.cap > eps_ && !res.source_side[e.to]) {
        res.source_side[e.to] = 1;
        q.push_back(e.to);
      }
  }
  return res;
}

MaxFlowResult max_flow(const FlowNetwork& net) {
  return MaxFlowSolver(net).solve();
}

}  // namespace graphscan
