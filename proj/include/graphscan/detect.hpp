#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "graphscan/graph.hpp"
#include "graphscan/mrf.hpp"

namespace graphscan {

/// Lagrangian coordinates of the LESS dual.
struct DualPoint {
  double eta0 = 0.0;
  double eta1 = 0.0;
};

struct DetectOptions {
  double tol = 1e-6;          // absolute tolerance on each per-t dual minimum
  int max_calls_per_t = 500;  // hard cap on g_dual evaluations per t
  bool parallel = false;      // per-t cold starts instead of the warm chain
  int gss_guard = 25;         // enumeration guard for gss_bruteforce
  bool two_sided = false;     // GLR variant: scan both y and -y
};

struct TraceRow {
  int t = 0;
  double value = 0.0;  // per-t dual minimum h_t
  double eta0 = 0.0;
  double eta1 = 0.0;
  int calls = 0;       // g_dual evaluations spent on this t
};

struct DetectionResult {
  double statistic = 0.0;
  std::string method;  // gss | less | max | sum
  int best_t = -1;     // -1 when absent
  bool has_dual = false;
  DualPoint best_dual;
  std::vector<char> best_x;  // empty when absent
  bool has_cluster = false;
  Cluster argmax_cluster;
  std::vector<TraceRow> trace;
  bool approximate = false;  // iteration budget exhausted before tolerance
  double gap_bound = 0.0;    // achieved duality gap when approximate
};

/// Exact maximum of 1_C'y / sqrt(|C|) over nonempty C with out(C) <= rho,
/// by Gray-code enumeration of all subsets. Refuses p over the guard.
/// Ties break to the lexicographically smallest member set.
DetectionResult gss_bruteforce(const DirectedGraph& g,
                               const std::vector<double>& y, double rho,
                               const DetectOptions& opts = {});

/// Lovasz extended scan statistic via its dual: for each t in [p] minimizes
/// h_t(eta) = g_dual + eta0*t + eta1*rho over eta >= 0 and returns
/// max(0, max_t h_t / sqrt(t)). Every evaluated dual point upper-bounds the
/// primal, so the statistic stays a valid upper bound even when flagged
/// approximate.
DetectionResult less(const DirectedGraph& g, const std::vector<double>& y,
                     double rho, const DetectOptions& opts = {});

struct DualMinResult {
  double value = 0.0;
  DualPoint point;
  std::vector<char> x_star;
  int calls = 0;
  bool approximate = false;
  double gap = 0.0;
};

/// Inner 2-D convex minimization of h_t for a single t.
DualMinResult minimize_dual(const DirectedGraph& g,
                            const std::vector<double>& y, int t, double rho,
                            DualPoint warm, const DetectOptions& opts = {});

double max_test(const std::vector<double>& y);
double sum_test(const std::vector<double>& y);

/// Trace CSV with columns t,value,eta0,eta1,calls.
void write_trace_csv(std::ostream& out, const DetectionResult& r);

}  // namespace graphscan
