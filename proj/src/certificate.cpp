#include "mrc/certificate.hpp"

#include <algorithm>
#include <set>

#include "mrc/errors.hpp"
#include "mrc/graph_io.hpp"
#include "mrc/isomorphism.hpp"
#include "mrc/reducer.hpp"
#include "mrc/sparsity.hpp"

namespace mrc {

namespace {

Json header(const char* command) { return Json{{"format", kCertificateFormat}, {"command", command}}; }

Json edge_json(Edge e) { return Json::array({e.u, e.v}); }

Json edges_json(std::span<const Edge> es) {
  Json out = Json::array();
  for (const auto& e : es) out.push_back(edge_json(e));
  return out;
}

Json forests_json(const ForestDecomposition& fs) {
  Json out = Json::array();
  for (const auto& f : fs) out.push_back(edges_json(f));
  return out;
}

Edge edge_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw PreconditionError("edge must be a pair [u, v]");
  const int u = j[0].get<int>();
  const int v = j[1].get<int>();
  if (u >= v) throw PreconditionError("edge [" + std::to_string(u) + ", " + std::to_string(v) + "] needs u < v");
  return {u, v};
}

std::vector<Edge> edges_from(const Json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) out.push_back(edge_from(e));
  return out;
}

ForestDecomposition forests_from(const Json& j) {
  ForestDecomposition out;
  for (const auto& f : j) out.push_back(edges_from(f));
  return out;
}

bool valid_vertex_set(const Graph& g, const std::vector<int>& vs) {
  std::set<int> seen;
  for (int v : vs)
    if (v < 0 || v >= g.vertex_count() || !seen.insert(v).second) return false;
  return !vs.empty();
}

// e(H) > r (v(H) - 1): H alone forces a monochromatic cycle.
bool is_dense(const Graph& g, const std::vector<int>& vs, int r) {
  return valid_vertex_set(g, vs) &&
         induced_edge_count(g, vs) > r * (static_cast<int>(vs.size()) - 1);
}

bool has_edge(const Graph& g, Edge e) {
  return e.u >= 0 && e.v < g.vertex_count() && g.has_edge(e.u, e.v);
}

GraphTag base_from_name(const std::string& name) {
  for (auto t : {GraphTag::K5minusE, GraphTag::K4veeK4})
    if (tag_name(t) == name) return t;
  throw PreconditionError("unknown base graph '" + name + "'");
}

BuildKind build_kind_from_name(const std::string& name) {
  for (auto k : {BuildKind::BaseCase, BuildKind::CreateSpace, BuildKind::EnlargeCycle, BuildKind::GrowTree,
                 BuildKind::ExtendBranch, BuildKind::NewBranch})
    if (build_kind_name(k) == name) return k;
  throw PreconditionError("unknown build step '" + name + "'");
}

StepKind step_kind_from_name(const std::string& name) {
  for (auto k : {StepKind::ContractEdge, StepKind::DeleteEdge, StepKind::DropIsolatedVertex})
    if (step_kind_name(k) == name) return k;
  throw PreconditionError("unknown reduction step '" + name + "'");
}

Json build_step_json(const BuildStep& s) {
  return Json{{"kind", build_kind_name(s.kind)}, {"case", s.case_id}, {"u", s.u},
              {"v", s.v},   {"w", s.w},   {"x", s.x},
              {"y", s.y},   {"cycle", s.cycle}, {"simulate", s.simulate},
              {"cycles", s.cycles}};
}

BuildStep build_step_from(const Json& j) {
  BuildStep s;
  s.kind = build_kind_from_name(j.at("kind").get<std::string>());
  s.case_id = j.at("case").get<int>();
  s.u = j.at("u").get<int>();
  s.v = j.at("v").get<int>();
  s.w = j.at("w").get<int>();
  s.x = j.at("x").get<int>();
  s.y = j.at("y").get<int>();
  s.cycle = j.at("cycle").get<int>();
  s.simulate = j.at("simulate").get<bool>();
  s.cycles = j.at("cycles").get<std::vector<int>>();
  return s;
}

// Indices a replay would dereference must be in range before extend_coloring
// touches them.
std::optional<std::string> script_problem(const std::vector<BuildStep>& script, int cycles) {
  if (script.empty() || script[0].kind != BuildKind::BaseCase) return "build script must start with a base case";
  for (std::size_t i = 0; i < script.size(); ++i) {
    const auto& s = script[i];
    const std::string at = "build step " + std::to_string(i);
    if (s.kind == BuildKind::BaseCase) {
      if (i != 0) return at + ": base case after the start";
      const std::size_t need = (s.case_id == 4 || s.case_id == 6) ? 2 : 1;
      if (s.case_id < 1 || s.case_id > 6 || s.case_id == 5) return at + ": unknown base case";
      if (s.cycles.size() < need) return at + ": base case lists too few cycles";
      for (int c : s.cycles)
        if (c < 0 || c >= cycles) return at + ": cycle index out of range";
      continue;
    }
    const bool needs_cycle = !(s.kind == BuildKind::CreateSpace && s.simulate);
    if (needs_cycle && (s.cycle < 0 || s.cycle >= cycles)) return at + ": cycle index out of range";
  }
  return std::nullopt;
}

Json reduction_steps_json(const std::vector<ReductionStep>& steps) {
  Json out = Json::array();
  for (const auto& s : steps) {
    Json j{{"kind", step_kind_name(s.kind)}, {"graph6", to_graph6(s.graph_after)}};
    if (s.kind == StepKind::DropIsolatedVertex) j["vertex"] = s.vertex;
    else j["edge"] = edge_json(s.edge);
    out.push_back(std::move(j));
  }
  return out;
}

class Checker {
 public:
  void expect(bool ok, const std::string& claim) {
    if (!ok) failures.push_back(claim);
  }
  std::vector<std::string> failures;
};

void verify_check(const Json& c, Checker& ck) {
  const int r = c.at("r").get<int>();
  if (r < 2) throw PreconditionError("r must be at least 2");
  const Graph g = graph_from_json(c.at("graph"));
  const auto verdict = c.at("verdict").get<std::string>();
  if (verdict == "not_ramsey") {
    const auto fs = forests_from(c.at("forests"));
    ck.expect(static_cast<int>(fs.size()) <= r && is_valid_decomposition(g, fs),
              "forests partition E(G) into at most r forests");
    return;
  }
  if (verdict != "minimal_ramsey" && verdict != "ramsey_not_minimal")
    throw PreconditionError("unknown check verdict '" + verdict + "'");
  ck.expect(is_dense(g, c.at("witness_vertices").get<std::vector<int>>(), r),
            "witness_vertices span more than r(|W|-1) edges");
  if (verdict == "minimal_ramsey") {
    const auto report = structural_report(g);
    ck.expect(g.vertex_count() == 0 || report.min_degree > 0, "no isolated vertices");
    const auto& del = c.at("edge_deletion_forests");
    ck.expect(static_cast<int>(del.size()) == g.edge_count(), "one decomposition per deleted edge");
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size() && i < del.size(); ++i) {
      const auto fs = forests_from(del[i]);
      ck.expect(static_cast<int>(fs.size()) <= r && is_valid_decomposition(remove_edge(g, edges[i]), fs),
                "G - " + std::to_string(edges[i].u) + std::to_string(edges[i].v) + " splits into r forests");
    }
  } else if (c.contains("removable_edge")) {
    const Edge f = edge_from(c.at("removable_edge"));
    ck.expect(has_edge(g, f), "removable_edge is an edge of G");
    if (has_edge(g, f))
      ck.expect(is_dense(remove_edge(g, f), c.at("removable_witness").get<std::vector<int>>(), r),
                "G - removable_edge is still Ramsey");
  } else {
    const int v = c.at("removable_vertex").get<int>();
    ck.expect(v >= 0 && v < g.vertex_count() && g.degree(v) == 0, "removable_vertex is isolated");
  }
  const bool minimal = is_minimal_ramsey(g, r).minimal;
  ck.expect(minimal == (verdict == "minimal_ramsey"), "verdict agrees with the pebble game");
}

void verify_decompose(const Json& c, Checker& ck) {
  const int r = c.at("r").get<int>();
  const Graph g = graph_from_json(c.at("graph"));
  const auto verdict = c.at("verdict").get<std::string>();
  if (verdict == "forests") {
    const auto fs = forests_from(c.at("forests"));
    ck.expect(static_cast<int>(fs.size()) <= r && is_valid_decomposition(g, fs),
              "forests partition E(G) into at most r forests");
  } else if (verdict == "dense") {
    ck.expect(is_dense(g, c.at("witness_vertices").get<std::vector<int>>(), r),
              "witness_vertices span more than r(|W|-1) edges");
  } else {
    throw PreconditionError("unknown decompose verdict '" + verdict + "'");
  }
  if (c.contains("fractional_arboricity")) {
    const auto& fa = c.at("fractional_arboricity");
    const Rational claimed(fa.at("num").get<std::int64_t>(), fa.at("den").get<std::int64_t>());
    const auto w = fa.at("witness_vertices").get<std::vector<int>>();
    ck.expect(valid_vertex_set(g, w) && w.size() >= 2 &&
                  Rational(induced_edge_count(g, w), static_cast<std::int64_t>(w.size()) - 1) == claimed,
              "fractional arboricity witness attains the value");
    ck.expect(fractional_arboricity(g).value == claimed, "fractional arboricity is the maximum");
    const std::int64_t ceil = (claimed.num + claimed.den - 1) / claimed.den;
    ck.expect(c.at("arboricity").get<std::int64_t>() == ceil, "arboricity is the ceiling");
  }
}

void verify_reduce(const Json& c, Checker& ck) {
  const Graph g = graph_from_json(c.at("graph"));
  ck.expect(is_minimal_ramsey(g, 2).minimal, "input is minimal Ramsey");
  Graph cur = g;
  int contractions = 0;
  std::size_t i = 0;
  for (const auto& s : c.at("steps")) {
    const std::string at = "step " + std::to_string(i++);
    const auto kind = step_kind_from_name(s.at("kind").get<std::string>());
    if (kind == StepKind::DropIsolatedVertex) {
      const int v = s.at("vertex").get<int>();
      if (v < 0 || v >= cur.vertex_count() || cur.degree(v) != 0) {
        ck.expect(false, at + ": dropped vertex is isolated");
        return;
      }
      cur = drop_vertex(cur, v);
    } else {
      const Edge e = edge_from(s.at("edge"));
      if (!has_edge(cur, e)) {
        ck.expect(false, at + ": edge exists");
        return;
      }
      if (kind == StepKind::ContractEdge) {
        ck.expect(triangle_count(cur, e) <= 1, at + ": contracted edge lies in at most one triangle");
        cur = contract_edge(cur, e);
        ++contractions;
      } else {
        cur = remove_edge(cur, e);
      }
      ck.expect(is_ramsey_cyclicity(cur, 2).verdict == RamseyVerdict::Ramsey, at + ": graph stays Ramsey");
    }
    ck.expect(to_graph6(cur) == s.at("graph6").get<std::string>(), at + ": recorded graph matches replay");
  }
  const GraphTag base = base_from_name(c.at("base").get<std::string>());
  ck.expect(cur == graph_from_json(c.at("final")), "final graph matches replay");
  ck.expect(is_isomorphic(cur, make_named(base).graph), "final graph is the named base");
  ck.expect(is_minimal_ramsey(cur, 2).minimal, "final graph is minimal Ramsey");
  ck.expect(contractible_edges(cur).empty(), "no contractible edge is left");
  ck.expect(c.at("contractions").get<int>() == contractions, "contraction count matches");
  ck.expect(contractions <= g.vertex_count() - 5, "at most v - 5 contractions");
}

void verify_minor(const Json& c, Checker& ck) {
  const Graph g = graph_from_json(c.at("graph"));
  MinorModel m;
  m.base = base_from_name(c.at("base").get<std::string>());
  m.base_graph = graph_from_json(c.at("base_graph"));
  m.branch_sets = c.at("branch_sets").get<std::vector<std::vector<int>>>();
  m.edge_map = edges_from(c.at("edge_map"));
  ck.expect(validate_minor_model(g, m), "branch sets and edge map form a minor model of the base");
}

void verify_generate(const Json& c, Checker& ck) {
  FamilySpec spec{parse_family(c.at("family").get<std::string>()), c.at("steps").get<int>()};
  const auto& members = c.at("members");
  ck.expect(static_cast<int>(members.size()) == spec.steps, "one member per step");
  const auto fresh = generate_family(spec);
  std::size_t i = 0;
  for (const auto& mj : members) {
    const std::string at = "member " + std::to_string(i + 1);
    const Graph g = graph_from_json(mj.at("graph"));
    ck.expect(i < fresh.size() && fresh[i].graph == g, at + ": matches regeneration");
    ck.expect(is_minimal_ramsey(g, 2).minimal, at + ": minimal Ramsey");
    const int target = mj.at("target_chi").get<int>();
    const int chi = chromatic_number(g, 64);
    ck.expect(mj.at("chi").get<int>() == chi, at + ": chromatic number");
    ck.expect(target == 0 || target == chi, at + ": chromatic number equals the target");
    const bool bip = structural_report(g).is_bipartite;
    ck.expect(mj.at("bipartite").get<bool>() == bip, at + ": bipartite flag");
    if (spec.kind == FamilyKind::Chi2BipartiteDouble) ck.expect(bip, at + ": bipartite");
    ++i;
  }
}

void verify_enumerate(const Json& c, Checker& ck) {
  const int n = c.at("n").get<int>();
  std::set<std::string> keys;
  for (const auto& gj : c.at("graphs")) {
    const Graph g = graph_from_json(gj);
    const std::string at = "graph " + to_graph6(g);
    ck.expect(g.vertex_count() == n, at + ": has n vertices");
    ck.expect(is_minimal_ramsey(g, 2).minimal, at + ": minimal Ramsey");
    ck.expect(keys.insert(canonical_key(g)).second, at + ": not isomorphic to an earlier graph");
  }
  ck.expect(c.at("count").get<std::size_t>() == c.at("graphs").size(), "count matches the list");
  if (n <= 8) {
    const auto fresh = enumerate_minimal(n);
    std::set<std::string> want;
    for (const auto& g : fresh) want.insert(canonical_key(g));
    ck.expect(want == keys, "list is complete");
  }
}

void verify_embed(const Json& c, Checker& ck, int jobs) {
  const int n = c.at("n").get<int>();
  Embedding emb;
  emb.forest = parse_forest(c.at("forest").at("cycles").get<std::vector<std::vector<int>>>());
  emb.host = graph_from_json(c.at("host"));
  emb.vertex_map = c.at("vertex_map").get<std::vector<int>>();
  for (const auto& s : c.at("build_script")) emb.build_script.push_back(build_step_from(s));
  if (auto bad = script_problem(emb.build_script, static_cast<int>(emb.forest.cycles.size()))) {
    ck.expect(false, *bad);
    return;
  }
  try {
    const auto rep = verify_embedding(emb, n, jobs);
    ck.expect(rep.vertex_count_ok, "host has n vertices");
    ck.expect(rep.subgraph_ok, "vertex_map embeds the forest");
    ck.expect(rep.minimal_ok, "host is minimal Ramsey");
    ck.expect(rep.colourings_ok, "every cycle colouring extends without new monochromatic cycles");
    ck.expect(rep.spanning_bound_ok, "spanning edge bound");
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const PreconditionError& e) {
    ck.expect(false, std::string("build script replays: ") + e.what());
  }
}

void verify_separate(const Json& c, Checker& ck) {
  const int l = c.at("l").get<int>();
  const int m = c.at("m").get<int>();
  const Graph g = graph_from_json(c.at("host"));
  EdgeColoring col{2, c.at("witness").get<std::vector<std::uint8_t>>()};
  ck.expect(l >= 5 && m >= 3 && m <= l, "3 <= m <= l and l >= 5");
  ck.expect(g.vertex_count() <= l, "host has at most l vertices");
  ck.expect(is_minimal_ramsey(g, 2).minimal, "host is minimal Ramsey");
  const bool shaped = static_cast<int>(col.colour.size()) == g.edge_count() &&
                      std::all_of(col.colour.begin(), col.colour.end(), [](auto x) { return x < 2; });
  ck.expect(shaped, "witness colours every edge with 0 or 1");
  if (shaped)
    ck.expect(monochromatic_cycle_lengths(g, col) == std::vector<int>{m},
              "witness has monochromatic cycles of length m only");
}

void verify_oracle(const Json& c, Checker& ck, int jobs) {
  const int r = c.at("r").get<int>();
  const Graph g = graph_from_json(c.at("graph"));
  const auto verdict = c.at("verdict").get<std::string>();
  const bool pebble = is_ramsey_cyclicity(g, r).verdict == RamseyVerdict::Ramsey;
  if (verdict == "not_ramsey") {
    EdgeColoring col{r, c.at("good_coloring").get<std::vector<std::uint8_t>>()};
    const bool shaped = static_cast<int>(col.colour.size()) == g.edge_count() &&
                        std::all_of(col.colour.begin(), col.colour.end(), [&](auto x) { return x < r; });
    ck.expect(shaped, "good_coloring colours every edge");
    if (shaped) ck.expect(!find_monochromatic_cycle(g, col), "good_coloring has no monochromatic cycle");
    ck.expect(!pebble, "pebble game agrees");
  } else if (verdict == "ramsey") {
    OracleOptions opt;
    opt.budget_edges = c.at("budget_edges").get<int>();
    opt.jobs = jobs;
    const auto res = is_ramsey_bruteforce(g, r, opt);
    ck.expect(res.is_ramsey, "exhaustive scan finds no good colouring");
    ck.expect(res.colorings_examined == c.at("colorings_examined").get<std::uint64_t>(),
              "colorings_examined matches the rescan");
    ck.expect(pebble, "pebble game agrees");
  } else {
    throw PreconditionError("unknown oracle verdict '" + verdict + "'");
  }
}

}  // namespace

Json graph_json(const Graph& g) {
  return Json{{"n", g.vertex_count()}, {"e", g.edge_count()}, {"graph6", to_graph6(g)}, {"hash", graph_hash(g)}};
}

Graph graph_from_json(const Json& j) {
  const Graph g = parse_graph6(j.at("graph6").get<std::string>());
  if (graph_hash(g) != j.at("hash").get<std::string>())
    throw PreconditionError("graph hash does not match its graph6 encoding");
  if (j.contains("n") && j.at("n").get<int>() != g.vertex_count())
    throw PreconditionError("recorded vertex count does not match the graph");
  if (j.contains("e") && j.at("e").get<int>() != g.edge_count())
    throw PreconditionError("recorded edge count does not match the graph");
  return g;
}

Json check_certificate(const Graph& g, int r) {
  if (r < 2) throw PreconditionError("r must be at least 2");
  Json c = header("check");
  c["r"] = r;
  c["graph"] = graph_json(g);
  c["n"] = g.vertex_count();
  c["e"] = g.edge_count();
  const auto cert = is_ramsey_cyclicity(g, r);
  if (cert.verdict == RamseyVerdict::NotRamsey) {
    c["verdict"] = "not_ramsey";
    c["forests"] = forests_json(*cert.decomposition);
    return c;
  }
  c["witness_vertices"] = *cert.dense_witness;
  bool minimal = true;
  Json deletion = Json::array();
  for (const auto& f : g.edges()) {
    const auto sub = is_ramsey_cyclicity(remove_edge(g, f), r);
    if (sub.verdict == RamseyVerdict::Ramsey) {
      c["removable_edge"] = edge_json(f);
      c["removable_witness"] = *sub.dense_witness;
      minimal = false;
      break;
    }
    deletion.push_back(forests_json(*sub.decomposition));
  }
  for (int v = 0; minimal && v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) {
      c["removable_vertex"] = v;
      minimal = false;
    }
  if (minimal != is_minimal_ramsey(g, r).minimal)
    throw TheoremViolation("edge-deletion minimality disagrees with the minimality test");
  if (minimal) c["edge_deletion_forests"] = std::move(deletion);
  c["verdict"] = minimal ? "minimal_ramsey" : "ramsey_not_minimal";
  return c;
}

Json decompose_certificate(const Graph& g, int r) {
  if (r < 1) throw PreconditionError("r must be at least 1");
  Json c = header("decompose");
  c["r"] = r;
  c["graph"] = graph_json(g);
  auto res = decompose_into_forests(g, r);
  if (auto* fs = std::get_if<ForestDecomposition>(&res)) {
    c["verdict"] = "forests";
    c["forests"] = forests_json(*fs);
  } else {
    c["verdict"] = "dense";
    c["witness_vertices"] = std::get<DenseWitness>(res).vertices;
  }
  if (g.vertex_count() >= 2) {
    const auto fa = fractional_arboricity(g);
    c["fractional_arboricity"] = {
        {"num", fa.value.num}, {"den", fa.value.den}, {"witness_vertices", fa.argmax_witness}};
    c["arboricity"] = (fa.value.num + fa.value.den - 1) / fa.value.den;
  }
  return c;
}

Json reduce_certificate(const Graph& g) {
  const auto trace = reduce_to_base(g);
  Json c = header("reduce");
  c["graph"] = graph_json(g);
  c["steps"] = reduction_steps_json(trace.steps);
  c["contractions"] = trace.contractions();
  c["base"] = tag_name(trace.base);
  c["final"] = graph_json(trace.final_graph());
  return c;
}

Json minor_certificate(const Graph& g) {
  const auto m = find_base_minor(g);
  Json c = header("minor");
  c["graph"] = graph_json(g);
  c["base"] = tag_name(m.base);
  c["base_graph"] = graph_json(m.base_graph);
  c["branch_sets"] = m.branch_sets;
  c["edge_map"] = edges_json(m.edge_map);
  return c;
}

Json generate_certificate(const FamilySpec& spec) {
  Json c = header("generate");
  c["family"] = family_name(spec.kind);
  c["steps"] = spec.steps;
  Json members = Json::array();
  int i = 1;
  for (const auto& m : generate_family(spec)) {
    const auto rep = structural_report(m.graph);
    members.push_back({{"index", i++},
                       {"graph", graph_json(m.graph)},
                       {"target_chi", m.target_chi},
                       {"chi", chromatic_number(m.graph, 64)},
                       {"bipartite", rep.is_bipartite},
                       {"min_degree", rep.min_degree},
                       {"max_degree", rep.max_degree}});
  }
  c["members"] = std::move(members);
  return c;
}

Json enumerate_certificate(int n, int jobs) {
  const auto graphs = enumerate_minimal(n, jobs);
  Json c = header("enumerate");
  c["n"] = n;
  c["count"] = graphs.size();
  Json list = Json::array();
  for (const auto& g : graphs) list.push_back(graph_json(g));
  c["graphs"] = std::move(list);
  return c;
}

Json embed_certificate(const std::vector<std::vector<int>>& cycles, int n, int jobs) {
  const auto f = parse_forest(cycles);
  const auto emb = embed(f, n);
  const auto rep = verify_embedding(emb, n, jobs);
  if (!rep.all_pass()) throw TheoremViolation("embedding failed its own verification");
  Json c = header("embed");
  c["n"] = n;
  c["forest"] = {{"cycles", cycles}, {"labels", f.labels}};
  c["host"] = graph_json(emb.host);
  c["vertex_map"] = emb.vertex_map;
  Json script = Json::array();
  for (const auto& s : emb.build_script) script.push_back(build_step_json(s));
  c["build_script"] = std::move(script);
  c["max_degree"] = structural_report(emb.host).max_degree;
  c["report"] = {{"vertex_count_ok", rep.vertex_count_ok}, {"subgraph_ok", rep.subgraph_ok},
                 {"minimal_ok", rep.minimal_ok},           {"colourings_ok", rep.colourings_ok},
                 {"spanning_bound_ok", rep.spanning_bound_ok}, {"colourings_checked", rep.colourings_checked}};
  return c;
}

Json separate_certificate(int l, int m) {
  const auto s = separate_cycle_families(l, m);
  Json c = header("separate");
  c["l"] = l;
  c["m"] = m;
  c["host"] = graph_json(s.embedding.host);
  c["witness"] = s.witness.colour;
  c["monochromatic_cycle_lengths"] = monochromatic_cycle_lengths(s.embedding.host, s.witness);
  return c;
}

Json oracle_certificate(const Graph& g, int r, const OracleOptions& options) {
  const auto res = is_ramsey_bruteforce(g, r, options);
  const bool pebble = is_ramsey_cyclicity(g, r).verdict == RamseyVerdict::Ramsey;
  if (pebble != res.is_ramsey) throw TheoremViolation("exhaustive colouring scan disagrees with the pebble game");
  Json c = header("oracle");
  c["r"] = r;
  c["graph"] = graph_json(g);
  c["verdict"] = res.is_ramsey ? "ramsey" : "not_ramsey";
  c["colorings_examined"] = res.colorings_examined;
  c["budget_edges"] = options.budget_edges;
  if (res.good_coloring) c["good_coloring"] = res.good_coloring->colour;
  return c;
}

VerifyOutcome verify_certificate(const Json& cert, int jobs) {
  VerifyOutcome out;
  Checker ck;
  try {
    if (!cert.is_object() || cert.value("format", "") != kCertificateFormat)
      throw PreconditionError(std::string("not a certificate: expected format ") + kCertificateFormat);
    out.command = cert.at("command").get<std::string>();
    if (out.command == "check") verify_check(cert, ck);
    else if (out.command == "decompose") verify_decompose(cert, ck);
    else if (out.command == "reduce") verify_reduce(cert, ck);
    else if (out.command == "minor") verify_minor(cert, ck);
    else if (out.command == "generate") verify_generate(cert, ck);
    else if (out.command == "enumerate") verify_enumerate(cert, ck);
    else if (out.command == "embed") verify_embed(cert, ck, jobs);
    else if (out.command == "separate") verify_separate(cert, ck);
    else if (out.command == "oracle") verify_oracle(cert, ck, jobs);
    else throw PreconditionError("unknown certificate command '" + out.command + "'");
  } catch (const Json::exception& e) {
    throw PreconditionError(std::string("malformed certificate: ") + e.what());
  }
  out.failures = std::move(ck.failures);
  return out;
}

Json verify_report(const VerifyOutcome& outcome) {
  Json c = header("verify");
  c["certificate_command"] = outcome.command;
  c["valid"] = outcome.ok();
  c["failures"] = outcome.failures;
  return c;
}

}  // namespace mrc
