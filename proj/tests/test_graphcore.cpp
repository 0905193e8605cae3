#include "doctest.h"

#include <random>

#include "mrc/errors.hpp"
#include "mrc/graph.hpp"
#include "mrc/graph_io.hpp"
#include "mrc/isomorphism.hpp"

using namespace mrc;

namespace {

// Reference triangle count by scanning all third vertices.
int triangles_by_triples(const Graph& g, Edge e) {
  int t = 0;
  for (int w = 0; w < g.vertex_count(); ++w)
    if (w != e.u && w != e.v && g.has_edge(e.u, w) && g.has_edge(e.v, w)) ++t;
  return t;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) es.push_back({u, v});
  return Graph(n, es);
}

}  // namespace

TEST_CASE("edge list parsing") {
  auto k4 = parse_graph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3", GraphFormat::EdgeList);
  CHECK(k4 == complete_graph(4));
  auto empty = parse_graph("3 0", GraphFormat::EdgeList);
  CHECK(empty.vertex_count() == 3);
  CHECK(empty.edge_count() == 0);
  auto commented = parse_graph("# a triangle\n3 3\n0 1 # first\n1 2\n\n0 2\n", GraphFormat::EdgeList);
  CHECK(commented == complete_graph(3));
}

TEST_CASE("edge list errors carry a line number") {
  auto line_of = [](std::string_view text) {
    try {
      parse_graph(text, GraphFormat::EdgeList);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("3 2\n0 1\n0 1\n") == 3);
  CHECK(line_of("3 1\n1 1\n") == 2);
  CHECK(line_of("3 1\n0 3\n") == 2);
  CHECK(line_of("3 2\n0 1\n") == 1);
  CHECK(line_of("x y\n") == 1);
  CHECK(line_of("3 1\n0 a\n") == 2);
}

TEST_CASE("graph6 of K4 is the hand-encoded constant") {
  // n=4 -> 'C'; six adjacency bits 111111 -> 63+63 = '~'
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(parse_graph6("C~") == complete_graph(4));
  CHECK(parse_graph6(">>graph6<<C~") == complete_graph(4));
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);
  CHECK(detect_format("C~\n") == GraphFormat::Graph6);
  CHECK(detect_format("4 0\n") == GraphFormat::EdgeList);
}

TEST_CASE("graph6 and edge list round trips") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 70;
    auto g = random_graph(n, 0.3, rng);
    CHECK(parse_graph6(to_graph6(g)) == g);
    CHECK(parse_graph(serialize_graph(g, GraphFormat::EdgeList), GraphFormat::EdgeList) == g);
    CHECK(parse_graph(serialize_graph(g, GraphFormat::Graph6), GraphFormat::Graph6) == g);
  }
  // size prefix '~' for n >= 63
  auto big = path_graph(100);
  const auto s = to_graph6(big);
  CHECK(s[0] == '~');
  CHECK(parse_graph6(s) == big);
}

TEST_CASE("graph construction rejects bad edges") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), PreconditionError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), PreconditionError);
}

TEST_CASE("contraction") {
  CHECK(contract_edge(complete_graph(3), {0, 1}) == complete_graph(2));
  CHECK(contract_edge(cycle_graph(4), {0, 1}) == cycle_graph(3));
  const auto k5e = k5_minus_e();
  REQUIRE(triangle_count(k5e, {0, 1}) == 3);
  auto c = contract_edge(k5e, {0, 1});
  CHECK(c.vertex_count() == 4);
  // 9 - 1 - 3 coalesced pairs; K4 minus the old non-edge xy
  CHECK(c.edge_count() == 5);
  CHECK(is_isomorphic(c, remove_edge(complete_graph(4), {2, 3})));
  CHECK_THROWS_AS(contract_edge(k5e, {3, 4}), PreconditionError);
  // re-indexing: merged vertex keeps the min id, higher ids shift down
  auto p = contract_edge(path_graph(4), {1, 2});
  CHECK(p == path_graph(3));
}

TEST_CASE("contraction edge count matches triangle count") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_graph(3 + trial % 6, 0.5, rng);
    for (const auto& e : g.edges()) {
      auto c = contract_edge(g, e);
      CHECK(c.vertex_count() == g.vertex_count() - 1);
      CHECK(c.edge_count() == g.edge_count() - 1 - triangles_by_triples(g, e));
    }
  }
}

TEST_CASE("triangle counts") {
  const auto c5 = cycle_graph(5);
  const auto k4 = complete_graph(4);
  for (const auto& e : c5.edges()) CHECK(triangle_count(c5, e) == 0);
  for (const auto& e : k4.edges()) CHECK(triangle_count(k4, e) == 2);
  CHECK(triangle_count(k5_minus_e(), {0, 1}) == 3);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = random_graph(8, 0.5, rng);
    for (const auto& e : g.edges()) CHECK(triangle_count(g, e) == triangles_by_triples(g, e));
  }
  CHECK_THROWS_AS(triangle_count(k5_minus_e(), {3, 4}), PreconditionError);
}

TEST_CASE("structural reports") {
  auto r = structural_report(k5_minus_e());
  CHECK(r.min_degree == 3);
  CHECK(r.max_degree == 4);
  CHECK(r.is_2_connected);
  CHECK_FALSE(r.is_bipartite);
  CHECK(r.component_count == 1);

  r = structural_report(path_graph(3));
  CHECK(r.min_degree == 1);
  CHECK(r.max_degree == 2);
  CHECK_FALSE(r.is_2_connected);
  CHECK(r.is_bipartite);
  CHECK(r.component_count == 1);

  r = structural_report(complete_bipartite(3, 5));
  CHECK(r.min_degree == 3);
  CHECK(r.max_degree == 5);
  CHECK(r.is_2_connected);
  CHECK(r.is_bipartite);

  r = structural_report(Graph(4, {{0, 1}, {2, 3}}));
  CHECK(r.component_count == 2);
}

TEST_CASE("named graphs") {
  CHECK(k5_minus_e().edge_count() == 9);
  CHECK_FALSE(k5_minus_e().has_edge(3, 4));
  const auto kk = k4_vee_k4();
  CHECK(kk.vertex_count() == 6);
  CHECK(kk.edge_count() == 11);
  CHECK(complete_bipartite(3, 5).edge_count() == 15);
  CHECK(make_named(GraphTag::Cn, 6).graph == cycle_graph(6));
}

TEST_CASE("canonical form is a labeling invariant") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 9;
    auto g = random_graph(n, 0.45, rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> es;
    for (const auto& e : g.edges()) es.push_back(make_edge(perm[e.u], perm[e.v]));
    Graph h(n, es);
    CHECK(canonical_key(g) == canonical_key(h));
    CHECK(is_isomorphic(g, h));
  }
  CHECK_FALSE(is_isomorphic(cycle_graph(6), Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
}
