#include "mrc/reducer.hpp"

#include <algorithm>

#include "mrc/errors.hpp"
#include "mrc/isomorphism.hpp"
#include "mrc/sparsity.hpp"

namespace mrc {

int ReductionTrace::contractions() const {
  return static_cast<int>(std::count_if(steps.begin(), steps.end(), [](const ReductionStep& s) {
    return s.kind == StepKind::ContractEdge;
  }));
}

std::string step_kind_name(StepKind kind) {
  switch (kind) {
    case StepKind::ContractEdge: return "contract_edge";
    case StepKind::DeleteEdge: return "delete_edge";
    case StepKind::DropIsolatedVertex: return "drop_isolated_vertex";
  }
  return "?";
}

std::vector<Edge> contractible_edges(const Graph& g) {
  std::vector<Edge> out;
  for (const auto& e : g.edges())
    if (triangle_count(g, e) <= 1) out.push_back(e);
  return out;
}

std::vector<ReductionStep> minimal_ramsey_steps(const Graph& g, int r) {
  if (is_ramsey_cyclicity(g, r).verdict != RamseyVerdict::Ramsey)
    throw PreconditionError("graph is not Ramsey for cyclicity with " + std::to_string(r) + " colours");
  std::vector<ReductionStep> steps;
  if (is_minimal_ramsey(g, r).minimal) return steps;

  // Ramseyness is monotone, so an edge kept once stays necessary: one pass
  // in sorted order equals repeatedly deleting the first deletable edge.
  Graph cur = g;
  const std::vector<Edge> order(g.edges().begin(), g.edges().end());
  for (const auto& e : order) {
    Graph next = remove_edge(cur, e);
    if (is_ramsey_cyclicity(next, r).verdict != RamseyVerdict::Ramsey) continue;
    cur = std::move(next);
    steps.push_back({StepKind::DeleteEdge, e, -1, cur});
  }
  for (int v = cur.vertex_count() - 1; v >= 0; --v) {
    if (cur.degree(v) != 0) continue;
    cur = drop_vertex(cur, v);
    steps.push_back({StepKind::DropIsolatedVertex, {}, v, cur});
  }
  if (!is_minimal_ramsey(cur, r).minimal)
    throw TheoremViolation("edge-deletion extraction did not end in a minimal Ramsey graph");
  return steps;
}

Graph minimal_ramsey_subgraph(const Graph& g, int r) {
  auto steps = minimal_ramsey_steps(g, r);
  return steps.empty() ? g : steps.back().graph_after;
}

ReductionTrace reduce_to_base(const Graph& g) {
  if (!is_minimal_ramsey(g, 2).minimal)
    throw PreconditionError("reduction needs a minimal Ramsey graph for cyclicity (two colours)");
  ReductionTrace trace;
  trace.start = g;
  Graph cur = g;
  while (true) {
    const auto candidates = contractible_edges(cur);
    if (candidates.empty()) break;
    const Edge e = candidates.front();
    cur = contract_edge(cur, e);
    trace.steps.push_back({StepKind::ContractEdge, e, -1, cur});
    if (is_ramsey_cyclicity(cur, 2).verdict != RamseyVerdict::Ramsey)
      throw TheoremViolation("contracting an edge in at most one triangle destroyed Ramseyness");
    // the contracted graph is often minimal already; extraction is skipped then
    for (auto& s : minimal_ramsey_steps(cur, 2)) trace.steps.push_back(std::move(s));
    cur = trace.final_graph();
  }
  if (cur.vertex_count() <= 6 && is_isomorphic(cur, k5_minus_e())) {
    trace.base = GraphTag::K5minusE;
  } else if (cur.vertex_count() <= 6 && is_isomorphic(cur, k4_vee_k4())) {
    trace.base = GraphTag::K4veeK4;
  } else {
    throw TheoremViolation("reduction stopped at " + std::to_string(cur.vertex_count()) +
                           " vertices on a graph that is neither K5-e nor K4vK4");
  }
  return trace;
}

std::vector<std::vector<int>> replay_branch_sets(int n, const std::vector<ReductionStep>& steps) {
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) sets[v] = {v};
  for (const auto& s : steps) {
    if (s.kind == StepKind::ContractEdge) {
      auto& keep = sets[s.edge.u];
      keep.insert(keep.end(), sets[s.edge.v].begin(), sets[s.edge.v].end());
      std::sort(keep.begin(), keep.end());
      sets.erase(sets.begin() + s.edge.v);
    } else if (s.kind == StepKind::DropIsolatedVertex) {
      sets.erase(sets.begin() + s.vertex);
    }
  }
  return sets;
}

namespace {

// Sorted-first original edge between two vertex sets.
std::optional<Edge> edge_between(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<char> in_a(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<char> in_b(in_a.size(), 0);
  for (int v : a) in_a[v] = 1;
  for (int v : b) in_b[v] = 1;
  for (const auto& e : g.edges())
    if ((in_a[e.u] && in_b[e.v]) || (in_a[e.v] && in_b[e.u])) return e;
  return std::nullopt;
}

}  // namespace

MinorModel find_base_minor(const Graph& g) {
  if (g.vertex_count() < 2 || g.edge_count() < 2 * g.vertex_count() - 1)
    throw PreconditionError("minor search needs e(G) >= 2v(G) - 1");
  auto steps = minimal_ramsey_steps(g, 2);
  const Graph& minimal = steps.empty() ? g : steps.back().graph_after;
  auto trace = reduce_to_base(minimal);
  const Graph final_graph = trace.final_graph();
  steps.insert(steps.end(), trace.steps.begin(), trace.steps.end());
  const auto sets = replay_branch_sets(g.vertex_count(), steps);

  MinorModel m;
  m.base = trace.base;
  m.base_graph = make_named(trace.base).graph;
  auto phi = find_isomorphism(m.base_graph, final_graph);
  if (!phi) throw TheoremViolation("base graph recognised but no isomorphism found");
  for (int i = 0; i < m.base_graph.vertex_count(); ++i) m.branch_sets.push_back(sets[(*phi)[i]]);
  for (const auto& e : m.base_graph.edges()) {
    auto orig = edge_between(g, m.branch_sets[e.u], m.branch_sets[e.v]);
    if (!orig) throw TheoremViolation("minor replay lost an edge between branch sets");
    m.edge_map.push_back(*orig);
  }
  if (!validate_minor_model(g, m)) throw TheoremViolation("replayed minor model failed validation");
  return m;
}

bool validate_minor_model(const Graph& g, const MinorModel& m) {
  const int n = g.vertex_count();
  const int k = m.base_graph.vertex_count();
  if (static_cast<int>(m.branch_sets.size()) != k) return false;
  if (static_cast<int>(m.edge_map.size()) != m.base_graph.edge_count()) return false;
  if (m.base != GraphTag::Custom && !(make_named(m.base).graph == m.base_graph)) return false;
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < k; ++i) {
    const auto& set = m.branch_sets[i];
    if (set.empty()) return false;
    for (int v : set) {
      if (v < 0 || v >= n || owner[v] >= 0) return false;
      owner[v] = i;
    }
    // connected inside g
    std::vector<int> stack{set.front()};
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    seen[set.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : g.neighbors(x))
        if (!seen[y] && owner[y] == i) {
          seen[y] = 1;
          ++reached;
          stack.push_back(y);
        }
    }
    if (reached != set.size()) return false;
  }
  const auto base_edges = m.base_graph.edges();
  for (std::size_t j = 0; j < base_edges.size(); ++j) {
    const Edge& orig = m.edge_map[j];
    if (orig.u < 0 || orig.v >= n || orig.u >= orig.v || !g.has_edge(orig.u, orig.v)) return false;
    const int a = owner[orig.u], b = owner[orig.v];
    if (make_edge(std::max(a, 0), std::max(b, 0)) != base_edges[j] || a < 0 || b < 0) return false;
  }
  return true;
}

}  // namespace mrc
