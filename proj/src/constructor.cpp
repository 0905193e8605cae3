#include "mrc/constructor.hpp"

#include <algorithm>
#include <map>

#include "mrc/cyclotree.hpp"
#include "mrc/errors.hpp"
#include "mrc/graph_io.hpp"
#include "mrc/isomorphism.hpp"
#include "mrc/kernels.hpp"
#include "mrc/oracle.hpp"
#include "mrc/sparsity.hpp"

namespace mrc {

std::string kind_name(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::C1: return "C1";
    case ConstructionKind::C2: return "C2";
    case ConstructionKind::C3: return "C3";
  }
  return "?";
}

namespace {

void require_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw PreconditionError("vertex " + std::to_string(v) + " is not in the graph");
}

void require_path(const Graph& g, const ConstructionSite& s) {
  require_vertex(g, s.u);
  require_vertex(g, s.v);
  require_vertex(g, s.w);
  if (s.u == s.w || !g.has_edge(s.u, s.v) || !g.has_edge(s.v, s.w))
    throw PreconditionError("construction needs a path u-v-w; got " + std::to_string(s.u) + "-" +
                            std::to_string(s.v) + "-" + std::to_string(s.w));
}

Graph build(const Graph& g, int extra, const std::vector<Edge>& add, const std::vector<Edge>& drop) {
  std::vector<Edge> es;
  for (const auto& e : g.edges())
    if (std::find(drop.begin(), drop.end(), e) == drop.end()) es.push_back(e);
  es.insert(es.end(), add.begin(), add.end());
  return Graph(g.vertex_count() + extra, std::move(es));
}

}  // namespace

ConstructionApplication apply_construction(const Graph& g, const ConstructionSite& site, bool check_input) {
  if (check_input && !is_minimal_ramsey(g, 2).minimal)
    throw PreconditionError("construction input is not a minimal Ramsey graph");
  ConstructionApplication app;
  app.site = site;
  app.before = g;
  const int n = g.vertex_count();
  const int x = n, y = n + 1;
  switch (site.kind) {
    case ConstructionKind::C1:
      require_path(g, site);
      app.uw_adjacent = g.has_edge(site.u, site.w);
      app.after = build(g, 1, {make_edge(x, site.u), make_edge(x, site.v), make_edge(x, site.w)},
                        {make_edge(site.v, site.w)});
      app.new_vertices = {x};
      break;
    case ConstructionKind::C2:
      require_vertex(g, site.v);
      require_vertex(g, site.w);
      if (site.v == site.w || !g.has_edge(site.v, site.w))
        throw PreconditionError("diamond replacement needs an edge vw");
      app.after = build(g, 2,
                        {make_edge(site.v, x), make_edge(site.v, y), make_edge(x, y), make_edge(x, site.w),
                         make_edge(y, site.w)},
                        {make_edge(site.v, site.w)});
      app.new_vertices = {x, y};
      break;
    case ConstructionKind::C3:
      require_path(g, site);
      app.uw_adjacent = g.has_edge(site.u, site.w);
      app.after = build(g, 2,
                        {make_edge(x, site.u), make_edge(x, site.v), make_edge(x, site.w), make_edge(y, site.u),
                         make_edge(y, site.v), make_edge(y, site.w)},
                        {make_edge(site.u, site.v), make_edge(site.v, site.w)});
      app.new_vertices = {x, y};
      break;
  }
  const int dv = static_cast<int>(app.new_vertices.size());
  const int de = site.kind == ConstructionKind::C1 ? 2 : 4;
  if (app.after.vertex_count() != n + dv || app.after.edge_count() != g.edge_count() + de)
    throw TheoremViolation("construction changed the vertex/edge counts unexpectedly");
  if (!is_minimal_ramsey(app.after, 2).minimal)
    throw TheoremViolation(kind_name(site.kind) + " produced a graph that is not minimal Ramsey");
  return app;
}

std::vector<ConstructionSite> legal_sites(const Graph& g, ConstructionKind kind) {
  std::vector<ConstructionSite> out;
  if (kind == ConstructionKind::C2) {
    for (const auto& e : g.edges()) out.push_back({kind, -1, e.u, e.v});
    return out;
  }
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u))
      for (int w : g.neighbors(v)) {
        if (w == u) continue;
        if (kind == ConstructionKind::C3 && w < u) continue;
        out.push_back({kind, u, v, w});
      }
  return out;
}

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Chi4DiamondChain: return "chi4";
    case FamilyKind::Chi3EdgeReplacement: return "chi3";
    case FamilyKind::Chi2BipartiteDouble: return "chi2";
    case FamilyKind::MaxDegreeFamily: return "maxdeg";
  }
  return "?";
}

FamilyKind parse_family(const std::string& name) {
  static const std::map<std::string, FamilyKind> names{
      {"chi4", FamilyKind::Chi4DiamondChain},         {"Chi4DiamondChain", FamilyKind::Chi4DiamondChain},
      {"chi3", FamilyKind::Chi3EdgeReplacement},      {"Chi3EdgeReplacement", FamilyKind::Chi3EdgeReplacement},
      {"chi2", FamilyKind::Chi2BipartiteDouble},      {"Chi2BipartiteDouble", FamilyKind::Chi2BipartiteDouble},
      {"maxdeg", FamilyKind::MaxDegreeFamily},        {"MaxDegreeFamily", FamilyKind::MaxDegreeFamily}};
  auto it = names.find(name);
  if (it == names.end()) throw PreconditionError("unknown family '" + name + "' (chi4, chi3, chi2, maxdeg)");
  return it->second;
}

Graph replace_all_edges_by_diamonds(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> es;
  int next = n;
  for (const auto& e : g.edges()) {
    const int p = next++, q = next++;
    es.insert(es.end(), {make_edge(e.u, p), make_edge(e.u, q), make_edge(p, q), make_edge(p, e.v), make_edge(q, e.v)});
  }
  return Graph(next, std::move(es));
}

namespace {

constexpr int kFamilyChiBudget = 64;

// K5-e with its K4 on {0,1,2,3}; the first replaced edge 0-4 lies outside
// it, and every later step replaces the edge (p, w) of the newest diamond.
std::vector<Graph> diamond_chain(int steps) {
  std::vector<Graph> out;
  Graph cur = k5_minus_e();
  Edge e{0, 4};
  for (int i = 0; i < steps; ++i) {
    auto app = apply_construction(cur, {ConstructionKind::C2, -1, e.u, e.v}, false);
    cur = app.after;
    e = make_edge(app.new_vertices[0], e.v);
    out.push_back(cur);
  }
  return out;
}

}  // namespace

std::vector<FamilyMember> generate_family(const FamilySpec& spec) {
  if (spec.steps < 0) throw PreconditionError("steps must be non-negative");
  if (spec.steps > 16) throw BudgetExceeded("family generation is limited to 16 steps");
  std::vector<FamilyMember> out;
  switch (spec.kind) {
    case FamilyKind::Chi4DiamondChain:
      for (auto& g : diamond_chain(spec.steps)) out.push_back({std::move(g), 4});
      break;
    case FamilyKind::Chi3EdgeReplacement: {
      // member i replaces every edge of K5-e (i = 1) or of chain member i-1
      auto chain = diamond_chain(std::max(0, spec.steps - 1));
      for (int i = 0; i < spec.steps; ++i) {
        const Graph& base = i == 0 ? k5_minus_e() : chain[i - 1];
        out.push_back({replace_all_edges_by_diamonds(base), 3});
      }
      break;
    }
    case FamilyKind::Chi2BipartiteDouble: {
      Graph cur = complete_bipartite(3, 5);
      for (int i = 0; i < spec.steps; ++i) {
        const auto site = legal_sites(cur, ConstructionKind::C3).front();
        auto first = apply_construction(cur, site, false);
        const int x = first.new_vertices[0], y = first.new_vertices[1];
        cur = apply_construction(first.after, {ConstructionKind::C3, x, site.v, y}, false).after;
        out.push_back({cur, 2});
      }
      break;
    }
    case FamilyKind::MaxDegreeFamily:
      for (int k = 1; k <= spec.steps; ++k) {
        ForestOfCycles star;
        for (int t = 0; t < k; ++t) star.cycles.push_back({0, 2 * t + 1, 2 * t + 2});
        star.vertex_count = 2 * k + 1;
        const int n = std::max(5, star.vertex_count);
        out.push_back({embed(star, n).host, 0});
      }
      break;
  }
  for (const auto& m : out) {
    if (!is_minimal_ramsey(m.graph, 2).minimal)
      throw TheoremViolation(family_name(spec.kind) + " member is not minimal Ramsey");
    if (m.target_chi == 2 && !structural_report(m.graph).is_bipartite)
      throw TheoremViolation("bipartite family member is not bipartite");
    if (m.target_chi > 2 && chromatic_number(m.graph, kFamilyChiBudget) != m.target_chi)
      throw TheoremViolation(family_name(spec.kind) + " member has the wrong chromatic number");
  }
  return out;
}

std::vector<Graph> enumerate_minimal(int n, int jobs) {
  if (n > 8) throw BudgetExceeded("enumeration is limited to n <= 8");
  if (n < 5) return {};
  const int bits = n * (n - 1) / 2;
  const int edges = 2 * n - 1;
  const auto pairs = kernels::pair_table(n);
  // Each isomorphism class has a labeling with non-increasing degrees, and
  // minimal graphs have min degree 3 and are 2-connected, so those filters
  // lose nothing before the exact subset-density test.
  auto pred = [&](std::uint64_t mask) {
    const auto g = kernels::small_from_mask(n, mask, pairs);
    for (int v = 0; v + 1 < n; ++v)
      if (std::popcount(g.adj[v]) < std::popcount(g.adj[v + 1])) return false;
    return kernels::small_min_degree(g) >= 3 && kernels::small_is_2_connected(g) &&
           kernels::small_is_minimal_ramsey2(g);
  };
  const auto masks = jobs > 1 ? kernels::collect_masks_parallel(bits, edges, pred, jobs)
                              : kernels::collect_masks_serial(bits, edges, pred);
  std::map<std::string, Graph> classes;
  for (auto m : masks) {
    Graph g = kernels::graph_from_mask(n, m);
    auto key = canonical_key(g);
    if (classes.count(key)) continue;
    if (!is_minimal_ramsey(g, 2).minimal)
      throw TheoremViolation("subset-density kernel and pebble game disagree on minimality");
    classes.emplace(std::move(key), canonical_form(g));
  }
  std::vector<Graph> out;
  for (auto& [key, g] : classes) out.push_back(std::move(g));
  return out;
}

}  // namespace mrc
