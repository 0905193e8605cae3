#include "doctest.h"

#include <random>

#include "mrc/errors.hpp"
#include "mrc/graph.hpp"
#include "mrc/kernels.hpp"
#include "mrc/oracle.hpp"

using namespace mrc;

namespace {

bool is_cycle_in(const Graph& g, const EdgeColoring& c, const MonochromaticCycle& cyc) {
  const auto& vs = cyc.vertices;
  if (vs.size() < 3) return false;
  std::vector<int> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    auto idx = g.edge_index(make_edge(vs[i], vs[(i + 1) % vs.size()]));
    if (!idx || c.colour[*idx] != cyc.colour) return false;
  }
  return true;
}

EdgeColoring colour_by(const Graph& g, const std::vector<Edge>& red) {
  EdgeColoring c{2, std::vector<std::uint8_t>(g.edges().size(), 1)};
  for (const auto& e : red) c.colour[*g.edge_index(e)] = 0;
  return c;
}

}  // namespace

TEST_CASE("monochromatic cycles") {
  auto k3 = complete_graph(3);
  auto cyc = find_monochromatic_cycle(k3, EdgeColoring{2, {0, 0, 0}});
  REQUIRE(cyc);
  CHECK(cyc->vertices.size() == 3);

  auto c4 = cycle_graph(4);
  EdgeColoring alt{2, std::vector<std::uint8_t>(4)};
  for (const auto& e : c4.edges()) alt.colour[*c4.edge_index(e)] = ((e.u + e.v) % 4 == 1) ? 0 : 1;
  CHECK_FALSE(find_monochromatic_cycle(c4, alt));

  // red Hamilton cycle 0-3-1-4-2 of K5-e, the remaining 4-path blue
  const auto g = k5_minus_e();
  auto col = colour_by(g, {{0, 3}, {1, 3}, {1, 4}, {2, 4}, {0, 2}});
  cyc = find_monochromatic_cycle(g, col);
  REQUIRE(cyc);
  CHECK(cyc->colour == 0);
  CHECK(cyc->vertices.size() == 5);
  CHECK(is_cycle_in(g, col, *cyc));
}

TEST_CASE("brute force Ramsey examples") {
  auto r = is_ramsey_bruteforce(k5_minus_e(), 2);
  CHECK(r.is_ramsey);
  CHECK(r.colorings_examined == 256);
  CHECK_FALSE(r.good_coloring);

  r = is_ramsey_bruteforce(cycle_graph(5), 2);
  CHECK_FALSE(r.is_ramsey);
  REQUIRE(r.good_coloring);
  CHECK_FALSE(find_monochromatic_cycle(cycle_graph(5), *r.good_coloring));

  const auto kk = k4_vee_k4();
  for (const auto& e : kk.edges()) {
    auto h = remove_edge(kk, e);
    auto s = is_ramsey_bruteforce(h, 2);
    CHECK_FALSE(s.is_ramsey);
    REQUIRE(s.good_coloring);
    CHECK_FALSE(find_monochromatic_cycle(h, *s.good_coloring));
  }
  CHECK_THROWS_AS(is_ramsey_bruteforce(complete_graph(8), 2), BudgetExceeded);
  CHECK_THROWS_AS(is_ramsey_bruteforce(complete_graph(4), 4), PreconditionError);
}

TEST_CASE("serial and parallel scans agree") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Edge> es;
    for (int u = 0; u < 7; ++u)
      for (int v = u + 1; v < 7; ++v)
        if (rng() % 100 < 60) es.push_back({u, v});
    Graph g(7, es);
    if (g.edge_count() > 16) continue;
    for (int r : {2, 3}) {
      if (r == 3 && g.edge_count() > 12) continue;
      auto a = kernels::scan_colourings_serial(g, r);
      auto b = kernels::scan_colourings_parallel(g, r, 4);
      CHECK(a.first_good == b.first_good);
      CHECK(a.examined == b.examined);
    }
  }
}

TEST_CASE("Gray-code scan flips one edge at a time") {
  for (std::uint64_t i = 0; i + 1 < 64; ++i) {
    auto a = kernels::colouring_at(i, 7, 2);
    auto b = kernels::colouring_at(i + 1, 7, 2);
    int diff = 0;
    for (std::size_t j = 0; j < a.size(); ++j) diff += a[j] != b[j];
    CHECK(diff == 1);
    CHECK(a[0] == 0);
  }
}

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(k5_minus_e()) == 4);
  CHECK(chromatic_number(complete_bipartite(3, 5)) == 2);
  CHECK(chromatic_number(cycle_graph(5)) == 3);
  CHECK(chromatic_number(complete_graph(6)) == 6);
  CHECK(chromatic_number(Graph(3)) == 1);
  CHECK(chromatic_number(k4_vee_k4()) == 4);
  CHECK_THROWS_AS(chromatic_number(complete_graph(17)), BudgetExceeded);
  // Grötzsch-free sanity: Petersen graph is 3-chromatic
  Graph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                      {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
  CHECK(chromatic_number(petersen) == 3);
}

TEST_CASE("odd-cyclicity Ramsey via chromatic number") {
  CHECK(is_ramsey_odd_cyclicity(complete_graph(5), 2));
  CHECK_FALSE(is_ramsey_odd_cyclicity(complete_graph(4), 2));
  CHECK(is_ramsey_odd_cyclicity(complete_graph(3), 1));
  CHECK_THROWS_AS(is_ramsey_odd_cyclicity(complete_graph(3), 0), PreconditionError);
}
