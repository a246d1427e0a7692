#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <sstream>

#include "graphscan/electrical.hpp"
#include "graphscan/models.hpp"
#include "graphscan/rng.hpp"
#include "helpers.hpp"

using namespace graphscan;

TEST_CASE("series resistors on the path") {
  DirectedGraph g = from_undirected(3, {{0, 1, 1}, {1, 2, 1}});
  CHECK(effective_resistance(g, 0, 2) == doctest::Approx(2.0));
  CHECK(effective_resistance(g, 0, 1) == doctest::Approx(1.0));
  CHECK(effective_resistance(g, 1, 1) == doctest::Approx(0.0));
}

TEST_CASE("triangle pair resistance is two thirds") {
  DirectedGraph g = from_undirected(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}})
    CHECK(effective_resistance(g, u, v) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("torus adjacent-pair resistance equals (p-1)/m") {
  DirectedGraph g = torus_graph(15);
  CHECK(effective_resistance(g, 0, 1) ==
        doctest::Approx(224.0 / 450.0).epsilon(1e-8));
}

TEST_CASE("resistance table on a tree gives bridge values") {
  DirectedGraph g = from_undirected(
      5, {{0, 1, 2.0}, {1, 2, 0.5}, {1, 3, 1.0}, {3, 4, 4.0}});
  ResistanceTable t = resistance_table(g);
  for (int e = 0; e < g.arc_count(); ++e)
    CHECK(t.arc_resistance[e] ==
          doctest::Approx(1.0 / g.arc(e).weight).epsilon(1e-9));
  CHECK_FALSE(t.symmetrized);
}

TEST_CASE("Foster identity on random connected graphs") {
  auto rng = std::mt19937_64(307);
  for (int trial = 0; trial < 10; ++trial) {
    std::uniform_int_distribution<int> psize(5, 30);
    const int p = psize(rng);
    DirectedGraph g = testutil::random_connected_graph(p, rng, false);
    ResistanceTable t = resistance_table(g);
    double sum = 0.0;
    for (int e = 0; e < g.arc_count(); ++e)
      if (g.arc(e).tail < g.arc(e).head) sum += t.arc_resistance[e];
    CHECK(sum == doctest::Approx(double(p - 1)).epsilon(1e-8));
  }
}

TEST_CASE("resistances are symmetric across opposite arcs") {
  auto rng = std::mt19937_64(311);
  DirectedGraph g = testutil::random_connected_graph(12, rng, true);
  ResistanceTable t = resistance_table(g);
  std::map<std::pair<int, int>, double> by_pair;
  for (int e = 0; e < g.arc_count(); ++e) {
    const Arc& a = g.arc(e);
    auto key = std::minmax(a.tail, a.head);
    auto [it, fresh] = by_pair.emplace(key, t.arc_resistance[e]);
    if (!fresh) CHECK(it->second == doctest::Approx(t.arc_resistance[e]));
  }
}

TEST_CASE("boundary resistance sums weighted boundary arcs") {
  DirectedGraph path = from_undirected(3, {{0, 1, 1}, {1, 2, 1}});
  ResistanceTable pt = resistance_table(path);
  CHECK(boundary_resistance(path, pt, {0}) == doctest::Approx(1.0));

  DirectedGraph tri = from_undirected(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  ResistanceTable tt = resistance_table(tri);
  CHECK(boundary_resistance(tri, tt, {0}) ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-10));
  CHECK(boundary_resistance(tri, tt, {0, 1, 2}) == doctest::Approx(0.0));
}

TEST_CASE("r_class_bound dominates every feasible boundary resistance") {
  DirectedGraph tri = from_undirected(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  CHECK(r_class_bound(tri, 2.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-10));
  CHECK(r_class_bound(tri, 0.0) == doctest::Approx(0.0));

  auto rng = std::mt19937_64(313);
  for (int trial = 0; trial < 10; ++trial) {
    const int p = 7;
    DirectedGraph g = testutil::random_connected_graph(p, rng, true);
    ResistanceTable t = resistance_table(g);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double rho = unif(rng) * g.max_cut_upper_bound();
    const double bound = r_class_bound(g, t, rho);
    for (unsigned mask = 1; mask + 1 < (1u << p); ++mask) {
      auto members = testutil::mask_to_members(mask, p);
      if (out_weight(g, members) <= rho)
        CHECK(boundary_resistance(g, t, members) <= bound + 1e-9);
    }
  }
}

TEST_CASE("gss threshold hand value and domain checks") {
  CHECK(gss_threshold(2, 0.0, 0.05) ==
        doctest::Approx(std::sqrt(2.0 * std::log(2.0)) +
                        std::sqrt(2.0 * std::log(20.0)))
            .epsilon(1e-12));
  CHECK_THROWS(gss_threshold(1, 0.0, 0.05));
  CHECK_THROWS(gss_threshold(10, 0.0, 0.0));
  CHECK_THROWS(gss_threshold(10, 0.0, 1.0));
  CHECK_THROWS(gss_threshold(10, -1.0, 0.5));
}

TEST_CASE("alpha near one removes the tail term") {
  const double near = gss_threshold(5, 1.0, 0.999999);
  const double at_half = gss_threshold(5, 1.0, 0.5);
  CHECK(near < at_half);
  CHECK(near == doctest::Approx(gss_threshold(5, 1.0, 0.9999999)).epsilon(1e-3));
}

TEST_CASE("thresholds are monotone in r_class and in 1/alpha") {
  // the stated bound trades a 1/sqrt(r) term against a sqrt(r) term, so
  // r-monotonicity only kicks in once r log p dominates; check it there
  for (int p : {2, 10, 225}) {
    double prev_g = -1.0;
    for (double r : {0.0, 0.5, 1.0, 4.0, 16.0}) {
      const double gv = gss_threshold(p, r, 0.05);
      CHECK(gv >= prev_g);
      prev_g = gv;
    }
    double prev_l = -1.0;
    for (double r : {2.0, 4.0, 8.0, 16.0, 32.0}) {
      const double lv = less_threshold(p, r, 0.05);
      CHECK(lv >= prev_l);
      prev_l = lv;
    }
    prev_g = prev_l = -1.0;
    for (double a : {0.5, 0.2, 0.05, 0.01, 0.001}) {
      const double gv = gss_threshold(p, 1.0, a);
      const double lv = less_threshold(p, 1.0, a);
      CHECK(gv >= prev_g);
      CHECK(lv >= prev_l);
      prev_g = gv;
      prev_l = lv;
    }
  }
}

TEST_CASE("less threshold regression pin at the harness scale") {
  // frozen after first computation; guards against accidental formula edits
  CHECK(less_threshold(225, 7.97, 0.05) ==
        doctest::Approx(27.222306615549858).epsilon(1e-12));
}

TEST_CASE("threshold report echoes inputs") {
  ThresholdReport rep = make_threshold_report(225, 16.0, 7.97, 0.05);
  CHECK(rep.gss == doctest::Approx(gss_threshold(225, 7.97, 0.05)));
  CHECK(rep.less == doctest::Approx(less_threshold(225, 7.97, 0.05)));
  std::stringstream ss;
  write_threshold_report(ss, rep);
  CHECK(ss.str().find("rho 16") != std::string::npos);
  CHECK(ss.str().find("alpha 0.05") != std::string::npos);
}

TEST_CASE("wilson on a tree returns the tree") {
  DirectedGraph g =
      from_undirected(4, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}});
  auto rng = make_rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    auto tree = wilson_ust(g, rng);
    REQUIRE(tree.size() == 3);
    std::map<std::pair<int, int>, int> seen;
    for (auto [c, par] : tree) seen[std::minmax(c, par)]++;
    CHECK(seen.size() == 3);
    CHECK(seen.count({0, 1}) == 1);
    CHECK(seen.count({1, 2}) == 1);
    CHECK(seen.count({1, 3}) == 1);
  }
}

TEST_CASE("wilson on the path returns both edges") {
  DirectedGraph g = from_undirected(3, {{0, 1, 1}, {1, 2, 1}});
  auto rng = make_rng(6);
  auto tree = wilson_ust(g, rng);
  CHECK(tree.size() == 2);
}

TEST_CASE("wilson edge frequencies match the inclusion law on the triangle") {
  DirectedGraph g = from_undirected(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  auto rng = make_rng(7);
  const int N = 6000;
  std::map<std::pair<int, int>, int> count;
  for (int rep = 0; rep < N; ++rep)
    for (auto [c, par] : wilson_ust(g, rng)) count[std::minmax(c, par)]++;
  const double q = 2.0 / 3.0;
  const double se = std::sqrt(q * (1 - q) / N);
  for (auto& [key, c] : count)
    CHECK(std::abs(double(c) / N - q) <= 4.0 * se);
}

TEST_CASE("resistance csv format") {
  DirectedGraph g = from_undirected(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  ResistanceTable t = resistance_table(g);
  std::stringstream ss;
  write_resistance_csv(ss, g, t);
  std::string line;
  std::getline(ss, line);
  CHECK(line == "tail,head,weight,resistance");
  int rows = 0;
  while (std::getline(ss, line))
    if (!line.empty()) ++rows;
  CHECK(rows == g.arc_count());
}

TEST_CASE("disconnected graphs are rejected") {
  DirectedGraph g = from_undirected(4, {{0, 1, 1}, {2, 3, 1}});
  CHECK_THROWS(effective_resistance(g, 0, 3));
  CHECK_THROWS(resistance_table(g));
  auto rng = make_rng(8);
  CHECK_THROWS(wilson_ust(g, rng));
}
