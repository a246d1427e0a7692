#include "graphscan/detect.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>
#include <tuple>

namespace graphscan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------------
// 2-D LP: minimize max_i (a_i + b_i*u + c_i*v) over [0,U] x [0,V].
// Solved by enumerating envelope vertices: box corners, pairwise plane
// intersections clipped to box edges, and triple-plane intersections.

struct Plane {
  double a, b, c;
};

double eval_planes(const std::vector<Plane>& planes, double u, double v) {
  double m = -kInf;
  for (const Plane& p : planes) m = std::max(m, p.a + p.b * u + p.c * v);
  return m;
}

struct LpResult {
  double u = 0.0, v = 0.0;
  double value = 0.0;
};

LpResult min_max_planes(const std::vector<Plane>& planes, double U, double V) {
  const double edge_eps = 1e-9 * (1.0 + std::max(U, V));
  std::vector<std::pair<double, double>> cand = {
      {0, 0}, {U, 0}, {0, V}, {U, V}};

  auto push = [&](double u, double v) {
    if (u < -edge_eps || u > U + edge_eps || v < -edge_eps || v > V + edge_eps)
      return;
    cand.emplace_back(std::clamp(u, 0.0, U), std::clamp(v, 0.0, V));
  };

  const int k = static_cast<int>(planes.size());
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const double A = planes[i].b - planes[j].b;
      const double B = planes[i].c - planes[j].c;
      const double C = planes[j].a - planes[i].a;
      const double scale = std::abs(A) + std::abs(B) + 1e-300;
      // line A*u + B*v = C intersected with the four box edges
      if (std::abs(A) > 1e-13 * scale) {
        push(C / A, 0.0);
        push((C - B * V) / A, V);
      }
      if (std::abs(B) > 1e-13 * scale) {
        push(0.0, C / B);
        push(U, (C - A * U) / B);
      }
      for (int l = j + 1; l < k; ++l) {
        const double A2 = planes[i].b - planes[l].b;
        const double B2 = planes[i].c - planes[l].c;
        const double C2 = planes[l].a - planes[i].a;
        const double det = A * B2 - A2 * B;
        const double dscale =
            (std::abs(A) + std::abs(B)) * (std::abs(A2) + std::abs(B2)) + 1e-300;
        if (std::abs(det) < 1e-13 * dscale) continue;
        push((C * B2 - C2 * B) / det, (A * C2 - A2 * C) / det);
      }
    }
  }

  LpResult best;
  best.value = kInf;
  for (const auto& [u, v] : cand) {
    const double f = eval_planes(planes, u, v);
    if (f < best.value ||
        (f == best.value && (u < best.u || (u == best.u && v < best.v)))) {
      best = {u, v, f};
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Cut pool shared across the t-loop: each evaluated x contributes the affine
// lower model l(eta) = s + eta0*(t - n) + eta1*(rho - c) for every t.

struct CutInfo {
  double s;  // y'x
  double n;  // 1'x
  double c;  // out(x)
};

struct CutPool {
  std::vector<CutInfo> cuts;
  std::set<std::tuple<double, double, double>> keys;

  void add(double s, double n, double c) {
    if (keys.emplace(s, n, c).second) cuts.push_back({s, n, c});
  }
};

DualMinResult minimize_dual_pooled(const DirectedGraph& g,
                                   const std::vector<double>& y, int t,
                                   double rho, DualPoint warm,
                                   const DetectOptions& opts, CutPool& pool,
                                   double box_u, double box_v) {
  auto to_plane = [&](const CutInfo& ci) {
    return Plane{ci.s, static_cast<double>(t) - ci.n, rho - ci.c};
  };

  // working set: the analytic cuts (always pool entries 0..2) plus the
  // pool cuts most binding at the warm point
  std::vector<Plane> planes;
  const int kKeep = 8;
  std::vector<int> order(pool.cuts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const Plane pa = to_plane(pool.cuts[a]), pb = to_plane(pool.cuts[b]);
    return pa.a + pa.b * warm.eta0 + pa.c * warm.eta1 >
           pb.a + pb.b * warm.eta0 + pb.c * warm.eta1;
  });
  for (int i = 0; i < static_cast<int>(order.size()); ++i)
    if (order[i] < 3 || i < kKeep) planes.push_back(to_plane(pool.cuts[order[i]]));

  DualMinResult res;
  res.value = kInf;
  std::set<std::pair<double, double>> visited;
  double lower = -kInf;

  while (res.calls < opts.max_calls_per_t) {
    LpResult lp = min_max_planes(planes, box_u, box_v);
    lower = std::max(lower, lp.value);
    if (res.value - lower <= opts.tol) break;
    if (!visited.emplace(lp.u, lp.v).second) break;  // no further progress

    DualValue dv = g_dual(g, y, lp.u, lp.v);
    ++res.calls;
    const double h = dv.value + lp.u * t + lp.v * rho;
    if (h < res.value) {
      res.value = h;
      res.point = {lp.u, lp.v};
      res.x_star.assign(dv.x_star.begin(), dv.x_star.end());
    }
    pool.add(dv.value + lp.u * dv.x_sum + lp.v * dv.x_out, dv.x_sum, dv.x_out);
    planes.push_back(Plane{dv.value + lp.u * dv.x_sum + lp.v * dv.x_out,
                           static_cast<double>(t) - dv.x_sum, rho - dv.x_out});
    if (res.value - lower <= opts.tol) break;
  }

  res.gap = res.value - lower;
  res.approximate = res.gap > opts.tol;
  return res;
}

void seed_pool(const DirectedGraph& g, const std::vector<double>& y,
               CutPool& pool) {
  const int p = g.vertex_count();
  pool.add(0.0, 0.0, 0.0);  // x = 0
  double total = std::accumulate(y.begin(), y.end(), 0.0);
  pool.add(total, static_cast<double>(p), 0.0);  // x = V (out(V) = 0)
  int imax = static_cast<int>(std::max_element(y.begin(), y.end()) - y.begin());
  pool.add(y[imax], 1.0, out_weight(g, {imax}));  // best singleton
}

void dual_box(const DirectedGraph& g, const std::vector<double>& y,
              double* box_u, double* box_v) {
  double ymax = 0.0, pos_sum = 0.0;
  for (double v : y) {
    ymax = std::max(ymax, v);
    if (v > 0.0) pos_sum += v;
  }
  *box_u = ymax;
  *box_v = g.arc_count() > 0 ? pos_sum / g.min_weight() : 0.0;
}

DetectionResult gss_one_sided(const DirectedGraph& g,
                              const std::vector<double>& y, double rho,
                              const DetectOptions& opts) {
  const int p = g.vertex_count();
  if (p > opts.gss_guard)
    throw std::invalid_argument(
        "gss_bruteforce refused: p = " + std::to_string(p) +
        " exceeds enumeration guard " + std::to_string(opts.gss_guard));
  if (static_cast<int>(y.size()) != p)
    throw std::invalid_argument("y length mismatch");
  if (!(rho >= 0.0)) throw std::invalid_argument("rho must be nonnegative");

  // in/out arc lists for incremental out(C) maintenance along the Gray walk
  std::vector<std::vector<std::pair<int, double>>> outs(p), ins(p);
  for (const Arc& a : g.arcs()) {
    outs[a.tail].emplace_back(a.head, a.weight);
    ins[a.head].emplace_back(a.tail, a.weight);
  }

  const double feas_eps = 1e-9 * std::max(1.0, rho);
  std::vector<char> in_set(p, 0);
  double out_val = 0.0, sum_y = 0.0;
  int size = 0;

  double best_val = -kInf;
  std::uint64_t best_mask = 0;
  int best_size = 0;

  auto members_of = [p](std::uint64_t mask) {
    std::vector<int> m;
    for (int v = 0; v < p; ++v)
      if (mask >> v & 1) m.push_back(v);
    return m;
  };

  std::uint64_t mask = 0;
  const std::uint64_t total = 1ULL << p;
  for (std::uint64_t k = 1; k < total; ++k) {
    const int v = std::countr_zero(k);  // bit flipped by the Gray step
    if (!in_set[v]) {
      in_set[v] = 1;
      mask |= 1ULL << v;
      ++size;
      sum_y += y[v];
      for (auto [w, wt] : outs[v])
        if (!in_set[w]) out_val += wt;
      for (auto [u, wt] : ins[v])
        if (in_set[u]) out_val -= wt;
    } else {
      in_set[v] = 0;
      mask &= ~(1ULL << v);
      --size;
      sum_y -= y[v];
      for (auto [w, wt] : outs[v])
        if (!in_set[w]) out_val -= wt;
      for (auto [u, wt] : ins[v])
        if (in_set[u]) out_val += wt;
    }
    if (size == 0 || out_val > rho + feas_eps) continue;
    const double val = sum_y / std::sqrt(static_cast<double>(size));
    if (val > best_val) {
      best_val = val;
      best_mask = mask;
      best_size = size;
    } else if (val == best_val) {
      auto a = members_of(mask), b = members_of(best_mask);
      if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())) {
        best_mask = mask;
        best_size = size;
      }
    }
  }
  if (best_val == -kInf) throw std::runtime_error("empty feasible class");

  DetectionResult r;
  r.method = "gss";
  r.statistic = best_val;
  r.best_t = best_size;
  r.argmax_cluster = make_cluster(g, members_of(best_mask));
  r.has_cluster = true;
  r.best_x.assign(p, 0);
  for (int v : r.argmax_cluster.members) r.best_x[v] = 1;
  return r;
}

}  // namespace

DetectionResult gss_bruteforce(const DirectedGraph& g,
                               const std::vector<double>& y, double rho,
                               const DetectOptions& opts) {
  DetectionResult r = gss_one_sided(g, y, rho, opts);
  if (opts.two_sided) {
    std::vector<double> neg(y.size());
    for (size_t i = 0; i < y.size(); ++i) neg[i] = -y[i];
    DetectionResult r2 = gss_one_sided(g, neg, rho, opts);
    if (r2.statistic > r.statistic) return r2;
  }
  return r;
}

DualMinResult minimize_dual(const DirectedGraph& g,
                            const std::vector<double>& y, int t, double rho,
                            DualPoint warm, const DetectOptions& opts) {
  if (t < 1 || t > g.vertex_count())
    throw std::invalid_argument("t out of range");
  CutPool pool;
  seed_pool(g, y, pool);
  double box_u, box_v;
  dual_box(g, y, &box_u, &box_v);
  return minimize_dual_pooled(g, y, t, rho, warm, opts, pool, box_u, box_v);
}

DetectionResult less(const DirectedGraph& g, const std::vector<double>& y,
                     double rho, const DetectOptions& opts) {
  const int p = g.vertex_count();
  if (static_cast<int>(y.size()) != p)
    throw std::invalid_argument("y length mismatch");
  if (!(rho >= 0.0)) throw std::invalid_argument("rho must be nonnegative");

  CutPool pool;
  seed_pool(g, y, pool);
  double box_u, box_v;
  dual_box(g, y, &box_u, &box_v);

  DetectionResult r;
  r.method = "less";
  r.statistic = 0.0;
  DualPoint warm{0.0, 0.0};
  double best_scaled = -kInf;
  DualMinResult best;

  for (int t = 1; t <= p; ++t) {
    DualMinResult mt;
    if (opts.parallel) {
      mt = minimize_dual(g, y, t, rho, DualPoint{0.0, 0.0}, opts);
    } else {
      mt = minimize_dual_pooled(g, y, t, rho, warm, opts, pool, box_u, box_v);
      warm = mt.point;
    }
    r.trace.push_back({t, mt.value, mt.point.eta0, mt.point.eta1, mt.calls});
    if (mt.approximate) {
      r.approximate = true;
      r.gap_bound = std::max(r.gap_bound, mt.gap);
    }
    const double scaled = mt.value / std::sqrt(static_cast<double>(t));
    if (scaled > best_scaled) {
      best_scaled = scaled;
      best = std::move(mt);
      r.best_t = t;
    }
  }

  r.statistic = std::max(0.0, best_scaled);
  r.best_dual = best.point;
  r.has_dual = true;
  r.best_x = best.x_star;
  return r;
}

double max_test(const std::vector<double>& y) {
  double m = 0.0;
  for (double v : y) m = std::max(m, std::abs(v));
  return m;
}

double sum_test(const std::vector<double>& y) {
  return std::accumulate(y.begin(), y.end(), 0.0);
}

void write_trace_csv(std::ostream& out, const DetectionResult& r) {
  out << "t,value,eta0,eta1,calls\n";
  out.precision(17);
  for (const TraceRow& row : r.trace)
    out << row.t << ',' << row.value << ',' << row.eta0 << ',' << row.eta1
        << ',' << row.calls << '\n';
}

}  // namespace graphscan
