#include "doctest.h"

#include <set>

#include "mrc/errors.hpp"
#include "mrc/cyclotree.hpp"
#include "mrc/isomorphism.hpp"
#include "mrc/oracle.hpp"
#include "mrc/sparsity.hpp"

using namespace mrc;

namespace {

ForestOfCycles triangle() { return parse_forest({{0, 1, 2}}); }
ForestOfCycles bowtie() { return parse_forest({{0, 1, 2}, {2, 3, 4}}); }
ForestOfCycles cycle(int m) {
  std::vector<int> c;
  for (int i = 0; i < m; ++i) c.push_back(i);
  return parse_forest({c});
}

}  // namespace

TEST_CASE("forest validation") {
  auto t = triangle();
  CHECK(t.vertex_count == 3);
  CHECK(forest_graph(t).edge_count() == 3);
  CHECK_THROWS_AS(parse_forest({{0, 1, 2}, {0, 2, 3}}), PreconditionError);
  auto b = bowtie();
  CHECK(b.vertex_count == 5);
  CHECK(forest_graph(b).edge_count() == 6);
  CHECK_THROWS_AS(parse_forest({{0, 1}}), PreconditionError);
  CHECK_THROWS_AS(parse_forest({{0, 1, 1}}), PreconditionError);
  // three triangles closing a ring through shared vertices
  CHECK_THROWS_AS(parse_forest({{0, 1, 2}, {2, 3, 4}, {4, 5, 0}}), PreconditionError);
  // arbitrary labels are compacted in sorted order
  auto f = parse_forest({{10, 30, 20}});
  CHECK(f.labels == std::vector<int>{10, 20, 30});
  CHECK(f.cycles[0] == std::vector<int>{0, 2, 1});
}

TEST_CASE("forest edge-count bounds") {
  for (const auto& f : all_forests(9)) {
    const int e = forest_graph(f).edge_count();
    CHECK(e >= f.vertex_count);
    CHECK(2 * e <= 3 * (f.vertex_count - 1));
  }
}

TEST_CASE("base cases on K5-e") {
  auto emb = embed(triangle(), 5);
  CHECK(is_isomorphic(emb.host, k5_minus_e()));
  CHECK(emb.build_script.size() == 1);
  CHECK(emb.build_script[0].case_id == 1);
  // red triangle abc: ay and cx red, path a-x-b-y-c blue
  auto col = extend_coloring(emb, {{0}});
  auto colour_of = [&](int a, int b) { return col.colour[*emb.host.edge_index(make_edge(a, b))]; };
  CHECK(colour_of(0, 4) == 0);
  CHECK(colour_of(2, 3) == 0);
  for (auto e : std::vector<Edge>{{0, 3}, {1, 3}, {1, 4}, {2, 4}}) CHECK(colour_of(e.u, e.v) == 1);

  emb = embed(cycle(5), 5);
  CHECK(emb.build_script[0].case_id == 3);
  col = extend_coloring(emb, {{0}});
  auto cyc = find_monochromatic_cycle(emb.host, col);
  REQUIRE(cyc);
  CHECK(cyc->vertices.size() == 5);
  // the remaining four edges form a blue path
  std::vector<Edge> blue;
  for (std::size_t i = 0; i < col.colour.size(); ++i)
    if (col.colour[i] == 1) blue.push_back(emb.host.edges()[i]);
  CHECK(blue.size() == 4);
  CHECK(is_acyclic(5, blue));

  CHECK(embed(cycle(4), 5).build_script[0].case_id == 2);
  CHECK(embed(bowtie(), 5).build_script[0].case_id == 4);
  for (const auto& f : {triangle(), cycle(4), cycle(5), bowtie()})
    CHECK(verify_embedding(embed(f, 5), 5).all_pass());
}

TEST_CASE("bowtie rule covers both colour patterns") {
  auto emb = embed(bowtie(), 5);
  for (std::uint8_t a : {0, 1})
    for (std::uint8_t b : {0, 1}) {
      CycleColoring cc{{a, b}};
      CHECK(only_forest_cycles(emb, cc, extend_coloring(emb, cc)));
    }
}

TEST_CASE("two disjoint triangles use K4vK4") {
  auto emb = embed(parse_forest({{0, 1, 2}, {3, 4, 5}}), 6);
  CHECK(emb.build_script[0].case_id == 6);
  CHECK(is_isomorphic(emb.host, k4_vee_k4()));
  CHECK(verify_embedding(emb, 6).all_pass());
}

TEST_CASE("bowtie on 6 and 7 vertices") {
  auto emb = embed(bowtie(), 6);
  CHECK(verify_embedding(emb, 6).all_pass());
  emb = embed(bowtie(), 7);
  CHECK(emb.host.vertex_count() == 7);
  CHECK(emb.build_script.size() == 3);
  CHECK(emb.build_script[1].kind == BuildKind::CreateSpace);
  CHECK(emb.build_script[2].kind == BuildKind::CreateSpace);
  CHECK(verify_embedding(emb, 7).all_pass());
  auto col = extend_coloring(emb, {{0, 0}});
  auto lengths = monochromatic_cycle_lengths(emb.host, col);
  CHECK(lengths == std::vector<int>{3});
}

TEST_CASE("embed preconditions") {
  CHECK_THROWS_AS(embed(triangle(), 4), PreconditionError);
  CHECK_THROWS_AS(embed(cycle(7), 6), PreconditionError);
  auto emb = embed(triangle(), 5);
  CHECK_THROWS_AS(extend_coloring(emb, {{0, 1}}), PreconditionError);
}

TEST_CASE("every step kind is locally sound") {
  // forests chosen so each kind appears: enlarging, branching from a
  // vertex with a free edge, from a saturated vertex, new components
  std::vector<ForestOfCycles> cases{
      cycle(7),
      parse_forest({{0, 1, 2}, {2, 3, 4}, {2, 5, 6}}),
      parse_forest({{0, 1, 2, 3, 4}, {4, 5, 6}, {6, 7, 8, 9}}),
      parse_forest({{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}),
      parse_forest({{0, 1, 2, 3}, {4, 5, 6}}),
  };
  std::set<BuildKind> seen;
  for (const auto& f : cases) {
    const int n = std::max(5, f.vertex_count) + 2;
    auto emb = embed(f, n);
    for (const auto& s : emb.build_script) seen.insert(s.kind);
    for (std::uint64_t mask = 0; mask < (1u << f.cycles.size()); ++mask) {
      CycleColoring cc;
      for (std::size_t i = 0; i < f.cycles.size(); ++i) cc.colour.push_back((mask >> i) & 1u);
      CHECK_FALSE(first_unsound_step(emb, cc).has_value());
    }
  }
  CHECK(seen.size() == 6);
}

TEST_CASE("exhaustive: every forest on <= 8 vertices embeds at every n <= 10") {
  const auto forests = all_forests(8);
  CHECK(forests.size() > 20);
  int embeddings = 0;
  for (const auto& f : forests) {
    for (int n = std::max(5, f.vertex_count); n <= 10; ++n) {
      auto emb = embed(f, n);
      auto r = verify_embedding(emb, n, 2);
      INFO("forest with " << f.cycles.size() << " cycles on " << f.vertex_count << " vertices, n=" << n);
      CHECK(r.all_pass());
      ++embeddings;
    }
  }
  MESSAGE(forests.size() << " forests, " << embeddings << " embeddings verified");
}

TEST_CASE("serial and parallel verification agree") {
  auto f = parse_forest({{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {6, 7, 8}});
  auto emb = embed(f, 10);
  auto a = verify_embedding(emb, 10, 1);
  auto b = verify_embedding(emb, 10, 4);
  CHECK(a.all_pass() == b.all_pass());
  CHECK(a.colourings_checked == 16);
  CHECK(a.failing_colouring == b.failing_colouring);
}

TEST_CASE("stars of triangles give large maximum degree") {
  for (int k = 1; k <= 8; ++k) {
    ForestOfCycles star;
    std::vector<std::vector<int>> cs;
    for (int t = 0; t < k; ++t) cs.push_back({0, 2 * t + 1, 2 * t + 2});
    auto emb = embed(parse_forest(cs), std::max(5, 2 * k + 1));
    CHECK(structural_report(emb.host).max_degree >= 2 * k);
    CHECK(is_minimal_ramsey(emb.host, 2).minimal);
  }
}

TEST_CASE("cycle family separation") {
  auto s = separate_cycle_families(5, 5);
  CHECK(is_isomorphic(s.embedding.host, k5_minus_e()));
  CHECK(monochromatic_cycle_lengths(s.embedding.host, s.witness) == std::vector<int>{5});
  CHECK(is_ramsey_bruteforce(s.embedding.host, 2).is_ramsey);

  s = separate_cycle_families(6, 6);
  CHECK(s.embedding.host.vertex_count() == 6);
  CHECK(monochromatic_cycle_lengths(s.embedding.host, s.witness) == std::vector<int>{6});

  s = separate_cycle_families(5, 3);
  CHECK(is_isomorphic(s.embedding.host, k5_minus_e()));
  CHECK(monochromatic_cycle_lengths(s.embedding.host, s.witness) == std::vector<int>{3});

  s = separate_cycle_families(7, 4);
  CHECK(monochromatic_cycle_lengths(s.embedding.host, s.witness) == std::vector<int>{4});

  CHECK_THROWS_AS(separate_cycle_families(4, 4), PreconditionError);
  CHECK_THROWS_AS(separate_cycle_families(6, 7), PreconditionError);
  CHECK_THROWS_AS(separate_cycle_families(6, 2), PreconditionError);
}
