#include "doctest.h"

#include <random>

#include "mrc/constructor.hpp"
#include "mrc/errors.hpp"
#include "mrc/isomorphism.hpp"
#include "mrc/kernels.hpp"
#include "mrc/reducer.hpp"
#include "mrc/sparsity.hpp"

using namespace mrc;

namespace {

// Minimal Ramsey graphs grown by random construction sequences.
std::vector<Graph> grown_corpus(int count, int max_n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    Graph g = rng() % 2 ? k5_minus_e() : k4_vee_k4();
    while (g.vertex_count() < max_n) {
      auto kind = static_cast<ConstructionKind>(rng() % 3);
      auto sites = legal_sites(g, kind);
      if (sites.empty()) continue;
      auto next = apply_construction(g, sites[rng() % sites.size()], false).after;
      if (next.vertex_count() > max_n) break;
      g = std::move(next);
    }
    out.push_back(g);
  }
  return out;
}

Graph random_graph(int n, int m, std::mt19937& rng) {
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(m));
  return Graph(n, all);
}

}  // namespace

TEST_CASE("contractible edges") {
  CHECK(contractible_edges(k5_minus_e()).empty());
  CHECK(contractible_edges(cycle_graph(6)).size() == 6);
  CHECK(contractible_edges(complete_graph(4)).empty());
}

TEST_CASE("minimal Ramsey subgraphs") {
  auto m = minimal_ramsey_subgraph(complete_graph(5), 2);
  CHECK(is_isomorphic(m, k5_minus_e()));
  CHECK(minimal_ramsey_subgraph(k5_minus_e(), 2) == k5_minus_e());
  CHECK(minimal_ramsey_steps(k5_minus_e(), 2).empty());
  auto pendant = add_edges(k5_minus_e(), 1, std::vector<Edge>{{0, 5}});
  CHECK(minimal_ramsey_subgraph(pendant, 2) == k5_minus_e());
  CHECK_THROWS_AS(minimal_ramsey_subgraph(cycle_graph(5), 2), PreconditionError);
  // three colours: K7 loses two edges
  auto k7 = minimal_ramsey_subgraph(complete_graph(7), 3);
  CHECK(k7.edge_count() == 19);
  CHECK(is_minimal_ramsey(k7, 3).minimal);
}

TEST_CASE("base graphs reduce in zero steps") {
  auto t = reduce_to_base(k5_minus_e());
  CHECK(t.steps.empty());
  CHECK(t.base == GraphTag::K5minusE);
  t = reduce_to_base(k4_vee_k4());
  CHECK(t.steps.empty());
  CHECK(t.base == GraphTag::K4veeK4);
  CHECK_THROWS_AS(reduce_to_base(complete_graph(5)), PreconditionError);
}

TEST_CASE("C1 extensions of K5-e reduce to K5-e") {
  const auto k5e = k5_minus_e();
  for (const auto& s : legal_sites(k5e, ConstructionKind::C1)) {
    auto g = apply_construction(k5e, s).after;
    auto t = reduce_to_base(g);
    CHECK(t.base == GraphTag::K5minusE);
    CHECK(is_isomorphic(t.final_graph(), k5e));
  }
}

TEST_CASE("every grown member reduces, with bounded contractions and valid steps") {
  for (const auto& g : grown_corpus(60, 12, 99)) {
    auto t = reduce_to_base(g);
    CHECK(t.contractions() <= g.vertex_count() - 5);
    Graph cur = g;
    for (const auto& s : t.steps) {
      if (s.kind == StepKind::ContractEdge) {
        CHECK(triangle_count(cur, s.edge) <= 1);
        CHECK(is_minimal_ramsey(cur, 2).minimal);
        cur = contract_edge(cur, s.edge);
      } else if (s.kind == StepKind::DeleteEdge) {
        cur = remove_edge(cur, s.edge);
      } else {
        cur = drop_vertex(cur, s.vertex);
      }
      CHECK(cur == s.graph_after);
      CHECK(is_ramsey_cyclicity(cur, 2).verdict == RamseyVerdict::Ramsey);
    }
  }
}

TEST_CASE("contracting an edge in at most one triangle keeps Ramsey graphs Ramsey") {
  std::mt19937 rng(7);
  int graphs = 0;
  while (graphs < 200) {
    const int n = 6 + static_cast<int>(rng() % 5);
    auto g = random_graph(n, 2 * n - 1 + static_cast<int>(rng() % 3), rng);
    if (is_ramsey_cyclicity(g, 2).verdict != RamseyVerdict::Ramsey) continue;
    ++graphs;
    for (const auto& e : contractible_edges(g))
      CHECK(is_ramsey_cyclicity(contract_edge(g, e), 2).verdict == RamseyVerdict::Ramsey);
  }
}

TEST_CASE("minor models") {
  auto m = find_base_minor(complete_graph(6));
  CHECK(validate_minor_model(complete_graph(6), m));
  m = find_base_minor(k5_minus_e());
  CHECK(m.base == GraphTag::K5minusE);
  for (int i = 0; i < 5; ++i) CHECK(m.branch_sets[i].size() == 1);
  CHECK(validate_minor_model(k5_minus_e(), m));

  auto bad = find_base_minor(complete_graph(6));
  bad.branch_sets[1].push_back(bad.branch_sets[0].front());
  CHECK_FALSE(validate_minor_model(complete_graph(6), bad));
  CHECK_THROWS_AS(find_base_minor(cycle_graph(6)), PreconditionError);

  std::mt19937 rng(2024);
  for (int i = 0; i < 30; ++i) {
    auto g = random_graph(10, 19, rng);
    auto model = find_base_minor(g);
    CHECK(validate_minor_model(g, model));
  }
  for (const auto& g : grown_corpus(20, 11, 5)) CHECK(validate_minor_model(g, find_base_minor(g)));
}

TEST_CASE("desk-scale check: triangle-saturated graphs") {
  // 7 vertices: no 2-connected graph with every edge in two triangles and
  // fewer than 14 edges
  const auto pairs7 = kernels::pair_table(7);
  auto found7 = kernels::collect_masks_parallel(
      21, -1,
      [&](std::uint64_t mask) {
        if (std::popcount(mask) >= 14) return false;
        auto g = kernels::small_from_mask(7, mask, pairs7);
        return kernels::small_min_degree(g) > 0 && kernels::small_is_2_connected(g) &&
               kernels::small_every_edge_in_two_triangles(g);
      },
      4);
  CHECK(found7.empty());
  // 5 and 6 vertices: with min degree 3 and e = 2v - 1, only the base graphs
  for (int n : {5, 6}) {
    const auto pairs = kernels::pair_table(n);
    auto found = kernels::collect_masks_serial(n * (n - 1) / 2, 2 * n - 1, [&](std::uint64_t mask) {
      auto g = kernels::small_from_mask(n, mask, pairs);
      return kernels::small_min_degree(g) == 3 && kernels::small_every_edge_in_two_triangles(g);
    });
    CHECK_FALSE(found.empty());
    for (auto mask : found) {
      auto g = kernels::graph_from_mask(n, mask);
      CHECK(is_isomorphic(g, n == 5 ? k5_minus_e() : k4_vee_k4()));
    }
  }
}
