#include "doctest.h"

#include "mrc/certificate.hpp"
#include "mrc/errors.hpp"
#include "mrc/graph_io.hpp"

using namespace mrc;

namespace {

bool round_trips(const Json& c) {
  auto text = c.dump(2);
  auto back = Json::parse(text);
  auto out = verify_certificate(back);
  for (const auto& f : out.failures) MESSAGE(f);
  return out.ok();
}

}  // namespace

TEST_CASE("graph json checks its hash") {
  auto j = graph_json(k5_minus_e());
  CHECK(graph_from_json(j) == k5_minus_e());
  j["hash"] = "0000000000000000";
  CHECK_THROWS_AS(graph_from_json(j), PreconditionError);
  j = graph_json(k5_minus_e());
  j["e"] = 8;
  CHECK_THROWS_AS(graph_from_json(j), PreconditionError);
}

TEST_CASE("check certificates for all three verdicts") {
  auto c = check_certificate(k5_minus_e(), 2);
  CHECK(c["verdict"] == "minimal_ramsey");
  CHECK(c["n"] == 5);
  CHECK(c["e"] == 9);
  CHECK(round_trips(c));

  c = check_certificate(complete_graph(5), 2);
  CHECK(c["verdict"] == "ramsey_not_minimal");
  CHECK(c.contains("removable_edge"));
  CHECK(round_trips(c));

  c = check_certificate(add_edges(k5_minus_e(), 1, {}), 2);
  CHECK(c["verdict"] == "ramsey_not_minimal");
  CHECK(c["removable_vertex"] == 5);
  CHECK(round_trips(c));

  c = check_certificate(cycle_graph(6), 2);
  CHECK(c["verdict"] == "not_ramsey");
  CHECK(round_trips(c));

  Graph k7 = remove_edge(remove_edge(complete_graph(7), {0, 1}), {2, 3});
  CHECK(round_trips(check_certificate(k7, 3)));
}

TEST_CASE("tampered check certificates fail") {
  auto c = check_certificate(k5_minus_e(), 2);
  c["witness_vertices"] = {0, 1, 2};
  CHECK_FALSE(verify_certificate(c).ok());

  c = check_certificate(cycle_graph(6), 2);
  c["forests"][0].push_back(c["forests"][1][0]);
  CHECK_FALSE(verify_certificate(c).ok());

  c = check_certificate(k5_minus_e(), 2);
  c["verdict"] = "not_ramsey";
  CHECK_THROWS_AS(verify_certificate(c), PreconditionError);

  c = check_certificate(k5_minus_e(), 2);
  c["graph"] = graph_json(complete_graph(5));
  CHECK_FALSE(verify_certificate(c).ok());

  c = check_certificate(k5_minus_e(), 2);
  c["format"] = "other";
  CHECK_THROWS_AS(verify_certificate(c), PreconditionError);
}

TEST_CASE("decompose certificates") {
  auto c = decompose_certificate(k5_minus_e(), 3);
  CHECK(c["verdict"] == "forests");
  CHECK(c["arboricity"] == 3);
  CHECK(c["fractional_arboricity"]["num"] == 9);
  CHECK(c["fractional_arboricity"]["den"] == 4);
  CHECK(round_trips(c));
  c = decompose_certificate(k5_minus_e(), 2);
  CHECK(c["verdict"] == "dense");
  CHECK(round_trips(c));
  c["fractional_arboricity"]["num"] = 2;
  c["fractional_arboricity"]["den"] = 1;
  CHECK_FALSE(verify_certificate(c).ok());
}

TEST_CASE("reduce and minor certificates") {
  auto site = legal_sites(k5_minus_e(), ConstructionKind::C1).front();
  auto g = apply_construction(k5_minus_e(), site).after;
  g = apply_construction(g, legal_sites(g, ConstructionKind::C2).back()).after;
  auto c = reduce_certificate(g);
  CHECK(round_trips(c));
  CHECK(c["contractions"].get<int>() <= g.vertex_count() - 5);
  const std::string base = c["base"];
  CHECK((base == "K5minusE" || base == "K4veeK4"));

  auto bad = c;
  bad["steps"][0]["graph6"] = to_graph6(complete_graph(3));
  CHECK_FALSE(verify_certificate(bad).ok());

  auto m = minor_certificate(complete_graph(7));
  CHECK(round_trips(m));
  m["branch_sets"][0].push_back(m["branch_sets"][1][0]);
  CHECK_FALSE(verify_certificate(m).ok());
}

TEST_CASE("generate, enumerate, embed, separate and oracle certificates") {
  CHECK(round_trips(generate_certificate({FamilyKind::Chi4DiamondChain, 2})));
  CHECK(round_trips(generate_certificate({FamilyKind::Chi2BipartiteDouble, 1})));
  CHECK(round_trips(enumerate_certificate(6)));

  auto e = enumerate_certificate(6);
  e["graphs"].erase(e["graphs"].begin());
  e["count"] = 4;
  CHECK_FALSE(verify_certificate(e).ok());

  auto emb = embed_certificate({{10, 11, 12}, {12, 13, 14}}, 7);
  CHECK(round_trips(emb));
  emb["build_script"][1]["cycle"] = 9;
  CHECK_FALSE(verify_certificate(emb).ok());
  emb = embed_certificate({{10, 11, 12}, {12, 13, 14}}, 7);
  emb["vertex_map"][0] = emb["vertex_map"][1];
  CHECK_FALSE(verify_certificate(emb).ok());

  auto s = separate_certificate(5, 5);
  CHECK(s["host"]["graph6"] == to_graph6(k5_minus_e()));
  CHECK(round_trips(s));
  s["witness"][0] = 1 - s["witness"][0].get<int>();
  CHECK_FALSE(verify_certificate(s).ok());

  CHECK(round_trips(oracle_certificate(k5_minus_e(), 2, {})));
  auto o = oracle_certificate(cycle_graph(5), 2, {});
  CHECK(o["verdict"] == "not_ramsey");
  CHECK(round_trips(o));
  o["good_coloring"] = {0, 0, 0, 0, 0};
  CHECK_FALSE(verify_certificate(o).ok());
}
