#include "mrc/graph.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "mrc/errors.hpp"
#include "mrc/union_find.hpp"

namespace mrc {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
  if (n < 0) throw PreconditionError("negative vertex count");
}

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n) {
  for (auto& e : edges) {
    if (e.u == e.v) throw PreconditionError("loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw PreconditionError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              "} has a vertex id outside 0.." + std::to_string(n - 1));
    e = make_edge(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end())
    throw PreconditionError("duplicate edge {" + std::to_string(dup->u) + "," +
                            std::to_string(dup->v) + "}");
  edges_ = std::move(edges);
  for (const auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::optional<int> Graph::edge_index(Edge e) const {
  e = make_edge(e.u, e.v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

std::vector<std::vector<Edge>> colour_classes(const Graph& g, const EdgeColoring& c) {
  if (static_cast<int>(c.colour.size()) != g.edge_count())
    throw PreconditionError("colouring is not defined on exactly the edge set");
  std::vector<std::vector<Edge>> classes(static_cast<std::size_t>(c.colours));
  for (int i = 0; i < g.edge_count(); ++i) {
    if (c.colour[i] >= c.colours) throw PreconditionError("colour index out of range");
    classes[c.colour[i]].push_back(g.edges()[i]);
  }
  return classes;
}

Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.push_back({u, v});
  return Graph(n, std::move(es));
}

Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, std::move(es));
}

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return Graph(n, std::move(es));
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> es;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) es.push_back({u, a + v});
  return Graph(a + b, std::move(es));
}

Graph k5_minus_e() { return remove_edge(complete_graph(5), {3, 4}); }

Graph k4_vee_k4() {
  return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                   {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
}

NamedGraph make_named(GraphTag tag, int param) {
  switch (tag) {
    case GraphTag::K5minusE: return {tag, 5, k5_minus_e()};
    case GraphTag::K4veeK4: return {tag, 6, k4_vee_k4()};
    case GraphTag::K35: return {tag, 8, complete_bipartite(3, 5)};
    case GraphTag::Kn: return {tag, param, complete_graph(param)};
    case GraphTag::Cn: return {tag, param, cycle_graph(param)};
    case GraphTag::Custom: break;
  }
  throw PreconditionError("custom graphs carry their own edge list");
}

std::string tag_name(GraphTag tag) {
  switch (tag) {
    case GraphTag::K5minusE: return "K5minusE";
    case GraphTag::K4veeK4: return "K4veeK4";
    case GraphTag::K35: return "K35";
    case GraphTag::Kn: return "Kn";
    case GraphTag::Cn: return "Cn";
    case GraphTag::Custom: return "custom";
  }
  return "custom";
}

Graph remove_edge(const Graph& g, Edge e) {
  e = make_edge(e.u, e.v);
  std::vector<Edge> es(g.edges().begin(), g.edges().end());
  auto it = std::find(es.begin(), es.end(), e);
  if (it == es.end())
    throw PreconditionError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} not present");
  es.erase(it);
  return Graph(g.vertex_count(), std::move(es));
}

Graph add_edges(const Graph& g, int new_vertices, std::span<const Edge> extra) {
  std::vector<Edge> es(g.edges().begin(), g.edges().end());
  es.insert(es.end(), extra.begin(), extra.end());
  return Graph(g.vertex_count() + new_vertices, std::move(es));
}

Graph induced_subgraph(const Graph& g, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> es;
  for (const auto& e : g.edges())
    if (pos[e.u] >= 0 && pos[e.v] >= 0) es.push_back({pos[e.u], pos[e.v]});
  return Graph(static_cast<int>(vertices.size()), std::move(es));
}

int induced_edge_count(const Graph& g, std::span<const int> vertices) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : vertices) in[v] = 1;
  int count = 0;
  for (const auto& e : g.edges()) count += in[e.u] && in[e.v];
  return count;
}

Relabeled drop_isolated(const Graph& g) {
  Relabeled out;
  std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) {
      pos[v] = static_cast<int>(out.original.size());
      out.original.push_back(v);
    }
  std::vector<Edge> es;
  for (const auto& e : g.edges()) es.push_back({pos[e.u], pos[e.v]});
  out.graph = Graph(static_cast<int>(out.original.size()), std::move(es));
  return out;
}

Graph drop_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count() || g.degree(v) != 0)
    throw PreconditionError("only isolated vertices can be dropped");
  std::vector<Edge> es;
  for (const auto& e : g.edges())
    es.push_back({e.u > v ? e.u - 1 : e.u, e.v > v ? e.v - 1 : e.v});
  return Graph(g.vertex_count() - 1, std::move(es));
}

Graph contract_edge(const Graph& g, Edge e) {
  e = make_edge(e.u, e.v);
  if (!g.has_edge(e.u, e.v))
    throw PreconditionError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} not present");
  auto relabel = [&](int x) {
    if (x == e.v) return e.u;
    return x > e.v ? x - 1 : x;
  };
  std::vector<Edge> es;
  for (const auto& f : g.edges()) {
    int a = relabel(f.u), b = relabel(f.v);
    if (a != b) es.push_back(make_edge(a, b));
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return Graph(g.vertex_count() - 1, std::move(es));
}

int triangle_count(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v))
    throw PreconditionError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} not present");
  auto a = g.neighbors(e.u);
  auto b = g.neighbors(e.v);
  int count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

namespace {

bool has_cut_vertex(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  int timer = 0;
  bool found = false;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (int w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[w] >= 0) {
        low[v] = std::min(low[v], disc[w]);
      } else {
        ++children;
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (parent >= 0 && low[w] >= disc[v]) found = true;
      }
    }
    if (parent < 0 && children > 1) found = true;
  };
  dfs(0, -1);
  return found;
}

}  // namespace

StructuralReport structural_report(const Graph& g) {
  StructuralReport r;
  const int n = g.vertex_count();
  if (n == 0) return r;
  r.min_degree = g.degree(0);
  for (int v = 0; v < n; ++v) {
    r.min_degree = std::min(r.min_degree, g.degree(v));
    r.max_degree = std::max(r.max_degree, g.degree(v));
  }
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  r.is_bipartite = true;
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    ++r.component_count;
    std::vector<int> stack{s};
    side[s] = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          r.is_bipartite = false;
        }
      }
    }
  }
  r.is_2_connected = n >= 3 && r.component_count == 1 && !has_cut_vertex(g);
  return r;
}

bool is_acyclic(int n, std::span<const Edge> edges) {
  UnionFind uf(n);
  for (const auto& e : edges)
    if (!uf.unite(e.u, e.v)) return false;
  return true;
}

Graph random_graph(int n, int e, std::uint64_t seed) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  if (e < 0 || e > static_cast<int>(pairs.size()))
    throw PreconditionError("random_graph: " + std::to_string(e) + " edges do not fit on " +
                            std::to_string(n) + " vertices");
  std::mt19937_64 rng(seed);
  for (int i = 0; i < e; ++i) {
    const auto left = static_cast<std::uint64_t>(pairs.size() - static_cast<std::size_t>(i));
    const auto j = static_cast<std::size_t>(i) + static_cast<std::size_t>(rng() % left);
    std::swap(pairs[static_cast<std::size_t>(i)], pairs[j]);
  }
  pairs.resize(static_cast<std::size_t>(e));
  return Graph(n, std::move(pairs));
}

}  // namespace mrc
