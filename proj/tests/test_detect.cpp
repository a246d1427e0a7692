#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "graphscan/detect.hpp"
#include "graphscan/lovasz.hpp"
#include "helpers.hpp"

using namespace graphscan;

namespace {

DirectedGraph p3() { return from_undirected(3, {{0, 1, 1}, {1, 2, 1}}); }

// Exact continuous primal oracle for small p. The feasible set
// {x in [0,1]^p : 1'x <= t, lovasz_out(x) <= rho} has its linear maximum
// at a vertex, and every vertex takes at most two fractional levels:
// x = 1_T + u 1_{A\T} + v 1_{B\A} with T <= A <= B and 1 >= u >= v >= 0.
// Enumerating all chains reduces each candidate to a two-variable LP in
// (u, v), solved by checking all constraint-pair intersections.
double primal_oracle(const DirectedGraph& g, const std::vector<double>& y,
                     double rho) {
  const int p = g.vertex_count();
  auto out_of = [&](unsigned mask) {
    std::vector<char> in(p, 0);
    for (int v = 0; v < p; ++v)
      if (mask >> v & 1u) in[v] = 1;
    return out_weight_mask(g, in);
  };
  auto sum_y = [&](unsigned mask) {
    double s = 0.0;
    for (int v = 0; v < p; ++v)
      if (mask >> v & 1u) s += y[v];
    return s;
  };

  double best = 0.0;
  for (int t = 1; t <= p; ++t) {
    double best_t = 0.0;
    for (unsigned B = 0; B < (1u << p); ++B) {
      for (unsigned A = B;; A = (A - 1) & B) {
        for (unsigned T = A;; T = (T - 1) & A) {
          // x(u,v) = 1_T + u 1_{A\T} + v 1_{B\A}, objective and all
          // constraints affine in (u, v) along the chain
          const double yT = sum_y(T), yA = sum_y(A), yB = sum_y(B);
          const double fT = out_of(T), fA = out_of(A), fB = out_of(B);
          const double nT = std::popcount(T), nA = std::popcount(A),
                       nB = std::popcount(B);
          // value(u,v) = yT + u (yA - yT) + v (yB - yA); constraints:
          //   nT + u (nA - nT) + v (nB - nA) <= t
          //   fT (1-u) + fA (u-v) + fB v      <= rho
          //   0 <= v <= u <= 1
          struct Lin {
            double c0, cu, cv;  // c0 + cu u + cv v <= 0
          };
          std::vector<Lin> cons = {
              {nT - t, nA - nT, nB - nA},
              {fT - rho, fA - fT, fB - fA},
              {0.0, -1.0, 0.0},          // u >= 0
              {-1.0, 1.0, 0.0},          // u <= 1
              {0.0, -1.0, 1.0},          // v <= u
              {0.0, 0.0, -1.0},          // v >= 0
          };
          auto feasible = [&](double u, double v) {
            for (const Lin& l : cons)
              if (l.c0 + l.cu * u + l.cv * v > 1e-9) return false;
            return true;
          };
          auto value = [&](double u, double v) {
            return yT + u * (yA - yT) + v * (yB - yA);
          };
          for (size_t i = 0; i < cons.size(); ++i)
            for (size_t j = i + 1; j < cons.size(); ++j) {
              const double det =
                  cons[i].cu * cons[j].cv - cons[j].cu * cons[i].cv;
              if (std::abs(det) < 1e-12) continue;
              const double u =
                  (-cons[i].c0 * cons[j].cv + cons[j].c0 * cons[i].cv) / det;
              const double v =
                  (-cons[i].cu * cons[j].c0 + cons[j].cu * cons[i].c0) / det;
              if (feasible(u, v))
                best_t = std::max(best_t, value(u, v) / std::sqrt(double(t)));
            }
          if (T == 0) break;
        }
        if (A == 0) break;
      }
    }
    best = std::max(best, best_t);
  }
  return best;
}

}  // namespace

TEST_CASE("gss on the hand-checked path instance") {
  DetectionResult r = gss_bruteforce(p3(), {1.0, 2.0, -1.0}, 1.0);
  CHECK(r.statistic == doctest::Approx(3.0 / std::sqrt(2.0)));
  CHECK(r.argmax_cluster.members == std::vector<int>{0, 1});
  CHECK(r.method == "gss");
}

TEST_CASE("gss with slack budget still picks the same cluster") {
  DetectionResult r = gss_bruteforce(p3(), {1.0, 2.0, -1.0}, 4.0);
  CHECK(r.statistic == doctest::Approx(3.0 / std::sqrt(2.0)));
  CHECK(r.argmax_cluster.members == std::vector<int>{0, 1});
}

TEST_CASE("gss of the zero signal is zero") {
  CHECK(gss_bruteforce(p3(), {0.0, 0.0, 0.0}, 1.0).statistic ==
        doctest::Approx(0.0));
}

TEST_CASE("gss refuses instances over the enumeration guard") {
  DetectOptions opts;
  opts.gss_guard = 2;
  CHECK_THROWS(gss_bruteforce(p3(), {1.0, 2.0, -1.0}, 1.0, opts));
}

TEST_CASE("gss two-sided flag scans the negated signal") {
  DetectOptions opts;
  opts.two_sided = true;
  DetectionResult r = gss_bruteforce(p3(), {-1.0, -2.0, 1.0}, 1.0, opts);
  CHECK(r.statistic == doctest::Approx(3.0 / std::sqrt(2.0)));
}

TEST_CASE("less matches gss on the path instance") {
  DetectionResult r = less(p3(), {1.0, 2.0, -1.0}, 1.0);
  CHECK(r.statistic == doctest::Approx(3.0 / std::sqrt(2.0)).epsilon(1e-6));
  CHECK(r.best_t == 2);
  CHECK(r.method == "less");
  CHECK_FALSE(r.approximate);
}

TEST_CASE("less on a single vertex") {
  DirectedGraph g = build_graph(1, {});
  CHECK(less(g, {2.0}, 3.0).statistic == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("less of a nonpositive signal is zero") {
  CHECK(less(p3(), {-1.0, 0.0, -2.0}, 1.0).statistic ==
        doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("minimize_dual hand-checked values on the path") {
  DirectedGraph g = p3();
  std::vector<double> y{1.0, 2.0, -1.0};
  DualMinResult full = minimize_dual(g, y, 3, 4.0, {});
  CHECK(full.value == doctest::Approx(3.0).epsilon(1e-6));
  DualMinResult one = minimize_dual(g, y, 1, 1.0, {});
  CHECK(one.value == doctest::Approx(5.0 / 3.0).epsilon(1e-6));

  DirectedGraph single = build_graph(1, {});
  DualMinResult sv = minimize_dual(single, {2.0}, 1, 0.0, {});
  CHECK(sv.value == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("minimize_dual of a nonpositive signal is zero at the origin") {
  DirectedGraph g = p3();
  DualMinResult r = minimize_dual(g, {-0.5, -1.0, -2.0}, 2, 1.0, {});
  CHECK(r.value == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("naive statistics") {
  CHECK(max_test({1.0, -3.0, 2.0}) == doctest::Approx(3.0));
  CHECK(sum_test({1.0, -3.0, 2.0}) == doctest::Approx(0.0));
  CHECK(max_test({0.0, 0.0}) == doctest::Approx(0.0));
  CHECK(sum_test({0.0, 0.0}) == doctest::Approx(0.0));
}

TEST_CASE("less dominates gss on random instances") {
  auto rng = std::mt19937_64(211);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<int> psize(2, 10);
    const int p = psize(rng);
    DirectedGraph g = testutil::random_connected_graph(p, rng, true);
    std::vector<double> y = testutil::random_gaussian(p, rng);
    const double rho = unif(rng) * g.max_cut_upper_bound();
    DetectionResult gs = gss_bruteforce(g, y, rho);
    DetectionResult ls = less(g, y, rho);
    if (gs.statistic >= 0.0) CHECK(ls.statistic >= gs.statistic - 1e-6);
  }
}

TEST_CASE("less equals the exact continuous primal oracle") {
  auto rng = std::mt19937_64(223);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 12; ++trial) {
    std::uniform_int_distribution<int> psize(2, 6);
    const int p = psize(rng);
    DirectedGraph g = testutil::random_connected_graph(p, rng, true);
    std::vector<double> y = testutil::random_gaussian(p, rng);
    const double rho = unif(rng) * g.max_cut_upper_bound();
    const double primal = primal_oracle(g, y, rho);
    DetectionResult ls = less(g, y, rho);
    CHECK(ls.statistic == doctest::Approx(primal).epsilon(1e-4).scale(1.0));
  }
}

TEST_CASE("every trace row upper-bounds the binary primal at its t") {
  auto rng = std::mt19937_64(227);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const int p = 6;
    DirectedGraph g = testutil::random_connected_graph(p, rng, true);
    std::vector<double> y = testutil::random_gaussian(p, rng);
    const double rho = unif(rng) * g.max_cut_upper_bound();
    DetectionResult ls = less(g, y, rho);
    for (const TraceRow& row : ls.trace) {
      // binary primal restricted to 1'x <= t, out(x) <= rho
      double best = 0.0;
      for (unsigned mask = 1; mask < (1u << p); ++mask) {
        if (std::popcount(mask) > row.t) continue;
        std::vector<char> in(p, 0);
        double s = 0.0;
        for (int v = 0; v < p; ++v)
          if (mask >> v & 1u) {
            in[v] = 1;
            s += y[v];
          }
        if (out_weight_mask(g, in) <= rho + 1e-12) best = std::max(best, s);
      }
      CHECK(row.value >= best - 1e-6);
    }
  }
}

TEST_CASE("less statistic is reproducible from its trace") {
  auto rng = std::mt19937_64(229);
  DirectedGraph g = testutil::random_connected_graph(8, rng, true);
  std::vector<double> y = testutil::random_gaussian(8, rng);
  DetectionResult r = less(g, y, 2.0);
  double from_trace = 0.0;
  for (const TraceRow& row : r.trace)
    from_trace = std::max(from_trace, row.value / std::sqrt(double(row.t)));
  CHECK(r.statistic == doctest::Approx(from_trace).epsilon(1e-8));
}

TEST_CASE("less is scale equivariant") {
  auto rng = std::mt19937_64(233);
  for (int trial = 0; trial < 8; ++trial) {
    DirectedGraph g = testutil::random_connected_graph(7, rng, true);
    std::vector<double> y = testutil::random_gaussian(7, rng);
    const double base = less(g, y, 1.5).statistic;
    for (double c : {0.5, 3.0}) {
      std::vector<double> cy(y);
      for (double& v : cy) v *= c;
      CHECK(less(g, cy, 1.5).statistic ==
            doctest::Approx(c * base).epsilon(1e-5).scale(1.0));
    }
  }
}

TEST_CASE("less is nondecreasing in rho") {
  auto rng = std::mt19937_64(239);
  for (int trial = 0; trial < 8; ++trial) {
    DirectedGraph g = testutil::random_connected_graph(7, rng, true);
    std::vector<double> y = testutil::random_gaussian(7, rng);
    double prev = -1.0;
    for (double rho : {0.0, 0.5, 1.0, 2.0, 4.0, 8.0}) {
      const double v = less(g, y, rho).statistic;
      CHECK(v >= prev - 1e-6);
      prev = v;
    }
  }
}

TEST_CASE("parallel per-t cold starts match the warm chain") {
  auto rng = std::mt19937_64(241);
  for (int trial = 0; trial < 8; ++trial) {
    DirectedGraph g = testutil::random_connected_graph(8, rng, true);
    std::vector<double> y = testutil::random_gaussian(8, rng);
    DetectOptions warm, cold;
    cold.parallel = true;
    const double a = less(g, y, 2.0, warm).statistic;
    const double b = less(g, y, 2.0, cold).statistic;
    CHECK(a == doctest::Approx(b).epsilon(2e-6).scale(1.0));
  }
}

TEST_CASE("rho = 0 restricts gss to zero-cut sets") {
  // on a connected graph only C = V has out(C) = 0
  DirectedGraph g = p3();
  DetectionResult r = gss_bruteforce(g, {1.0, 2.0, -1.0}, 0.0);
  CHECK(r.argmax_cluster.members == std::vector<int>{0, 1, 2});
  CHECK(r.statistic == doctest::Approx(2.0 / std::sqrt(3.0)));
}

TEST_CASE("trace CSV header and shape") {
  DetectionResult r = less(p3(), {1.0, 2.0, -1.0}, 1.0);
  std::stringstream ss;
  write_trace_csv(ss, r);
  std::string line;
  std::getline(ss, line);
  CHECK(line == "t,value,eta0,eta1,calls");
  int rows = 0;
  while (std::getline(ss, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 3);
}
