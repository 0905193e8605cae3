#include "doctest.h"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <map>
#include <set>

#include "mrc/constructor.hpp"
#include "mrc/errors.hpp"
#include "mrc/isomorphism.hpp"
#include "mrc/oracle.hpp"
#include "mrc/sparsity.hpp"

using namespace mrc;

namespace {

bool planar(const Graph& g) {
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BG bg(static_cast<std::size_t>(g.vertex_count()));
  for (const auto& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

std::set<std::string> keys(const std::vector<Graph>& gs) {
  std::set<std::string> out;
  for (const auto& g : gs) out.insert(canonical_key(g));
  return out;
}

}  // namespace

TEST_CASE("construction examples on K5-e") {
  const auto k5e = k5_minus_e();
  auto a = apply_construction(k5e, {ConstructionKind::C1, 0, 1, 2});
  CHECK(a.after.vertex_count() == 6);
  CHECK(a.after.edge_count() == 11);
  CHECK(a.uw_adjacent);
  CHECK(is_minimal_ramsey(a.after, 2).minimal);

  for (const auto& e : k5e.edges()) {
    auto b = apply_construction(k5e, {ConstructionKind::C2, -1, e.u, e.v});
    CHECK(b.after.vertex_count() == 7);
    CHECK(b.after.edge_count() == 13);
  }
  // x-v-y with x, y the non-adjacent pair
  auto c = apply_construction(k5e, {ConstructionKind::C3, 3, 0, 4});
  CHECK(c.after.vertex_count() == 7);
  CHECK(c.after.edge_count() == 13);
  CHECK_FALSE(c.uw_adjacent);
}

TEST_CASE("construction shape errors") {
  const auto k5e = k5_minus_e();
  CHECK_THROWS_AS(apply_construction(k5e, {ConstructionKind::C1, 3, 0, 3}), PreconditionError);
  CHECK_THROWS_AS(apply_construction(k5e, {ConstructionKind::C1, 0, 3, 4}), PreconditionError);
  CHECK_THROWS_AS(apply_construction(k5e, {ConstructionKind::C2, -1, 3, 4}), PreconditionError);
  CHECK_THROWS_AS(apply_construction(complete_graph(5), {ConstructionKind::C2, -1, 0, 1}), PreconditionError);
}

TEST_CASE("C1 extensions of K5-e") {
  // over all 2-paths there are four classes; with u, w non-adjacent only one
  const auto k5e = k5_minus_e();
  std::set<std::string> all, induced;
  for (const auto& s : legal_sites(k5e, ConstructionKind::C1)) {
    auto a = apply_construction(k5e, s);
    all.insert(canonical_key(a.after));
    if (!a.uw_adjacent) induced.insert(canonical_key(a.after));
  }
  CHECK(all.size() == 4);
  CHECK(induced.size() == 1);
}

TEST_CASE("closure and counting over all sites of small members") {
  std::vector<Graph> corpus{k5_minus_e(), k4_vee_k4()};
  for (const auto& s : legal_sites(k5_minus_e(), ConstructionKind::C1))
    corpus.push_back(apply_construction(k5_minus_e(), s).after);
  int applications = 0;
  for (const auto& g : corpus)
    for (auto kind : {ConstructionKind::C1, ConstructionKind::C2, ConstructionKind::C3})
      for (const auto& s : legal_sites(g, kind)) {
        auto a = apply_construction(g, s);
        const int dv = kind == ConstructionKind::C1 ? 1 : 2;
        const int de = kind == ConstructionKind::C1 ? 2 : 4;
        CHECK(a.after.vertex_count() == g.vertex_count() + dv);
        CHECK(a.after.edge_count() == g.edge_count() + de);
        CHECK(is_minimal_ramsey(a.after, 2).minimal);
        if (kind == ConstructionKind::C2 && planar(g)) CHECK(planar(a.after));
        ++applications;
      }
  MESSAGE(applications << " construction applications verified");
}

TEST_CASE("C1 can keep planarity") {
  // the new vertex sees u, v, w, so a site with u-v-w on one face keeps the
  // graph planar; some site always qualifies
  std::vector<Graph> planar_members;
  for (int n = 5; n <= 7; ++n)
    for (auto& g : enumerate_minimal(n))
      if (planar(g)) planar_members.push_back(g);
  CHECK_FALSE(planar_members.empty());
  for (const auto& g : planar_members) {
    bool kept = false;
    for (const auto& s : legal_sites(g, ConstructionKind::C1)) kept = kept || planar(apply_construction(g, s).after);
    CHECK(kept);
  }
}

TEST_CASE("families") {
  auto chi4 = generate_family({FamilyKind::Chi4DiamondChain, 3});
  REQUIRE(chi4.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(chi4[i].graph.vertex_count() == 7 + 2 * i);
    CHECK(chromatic_number(chi4[i].graph) == 4);
  }
  auto chi2 = generate_family({FamilyKind::Chi2BipartiteDouble, 1});
  REQUIRE(chi2.size() == 1);
  CHECK(chi2[0].graph.vertex_count() == 12);
  CHECK(structural_report(chi2[0].graph).is_bipartite);
  CHECK(is_minimal_ramsey(chi2[0].graph, 2).minimal);

  auto chi3 = generate_family({FamilyKind::Chi3EdgeReplacement, 1});
  REQUIRE(chi3.size() == 1);
  CHECK(chi3[0].graph.vertex_count() == 23);
  CHECK(chromatic_number(chi3[0].graph, 32) == 3);

  auto deg = generate_family({FamilyKind::MaxDegreeFamily, 4});
  REQUIRE(deg.size() == 4);
  for (int k = 1; k <= 4; ++k) CHECK(structural_report(deg[k - 1].graph).max_degree >= 2 * k);
  CHECK(generate_family({FamilyKind::Chi4DiamondChain, 0}).empty());
}

TEST_CASE("members of M(C) are 2-connected with min degree 3 and chi <= 4") {
  std::vector<Graph> corpus;
  for (auto kind : {FamilyKind::Chi4DiamondChain, FamilyKind::Chi2BipartiteDouble, FamilyKind::MaxDegreeFamily})
    for (auto& m : generate_family({kind, 3})) corpus.push_back(m.graph);
  for (auto& g : enumerate_minimal(7)) corpus.push_back(g);
  for (const auto& g : corpus) {
    auto r = structural_report(g);
    CHECK(g.edge_count() == 2 * g.vertex_count() - 1);
    CHECK(r.min_degree == 3);
    CHECK(r.is_2_connected);
    CHECK(chromatic_number(g, 32) <= 4);
  }
}

TEST_CASE("enumeration at small orders") {
  CHECK(enumerate_minimal(4).empty());
  auto five = enumerate_minimal(5);
  REQUIRE(five.size() == 1);
  CHECK(is_isomorphic(five[0], k5_minus_e()));

  auto six = enumerate_minimal(6);
  auto six_keys = keys(six);
  CHECK(six_keys.count(canonical_key(k4_vee_k4())));
  for (const auto& s : legal_sites(k5_minus_e(), ConstructionKind::C1))
    CHECK(six_keys.count(canonical_key(apply_construction(k5_minus_e(), s).after)));
  CHECK(keys(enumerate_minimal(6, 4)) == six_keys);
}

TEST_CASE("construction outputs on <= 7 vertices appear in the enumeration") {
  std::map<int, std::vector<Graph>> enumerated;
  std::map<int, std::set<std::string>> known;
  for (int n = 5; n <= 7; ++n) {
    enumerated[n] = enumerate_minimal(n, 4);
    known[n] = keys(enumerated[n]);
  }
  int checked = 0;
  for (int n = 5; n <= 6; ++n)
    for (const auto& g : enumerated[n])
      for (auto kind : {ConstructionKind::C1, ConstructionKind::C2, ConstructionKind::C3})
        for (const auto& s : legal_sites(g, kind)) {
          auto out = apply_construction(g, s).after;
          if (out.vertex_count() > 7) continue;
          CHECK(known[out.vertex_count()].count(canonical_key(out)) == 1);
          ++checked;
        }
  MESSAGE(checked << " outputs found in the enumeration; counts n=6: " << enumerated[6].size()
                  << ", n=7: " << enumerated[7].size());
}
