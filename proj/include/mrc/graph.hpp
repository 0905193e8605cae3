#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mrc {

struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable once constructed. Edges are stored as (u < v) pairs in sorted
/// order so every algorithm iterating them is reproducible; the position of
/// an edge in edges() is its edge index, used by EdgeColoring.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws PreconditionError on loops, duplicate edges or ids out of range.
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const int> neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool has_edge(int u, int v) const;
  std::optional<int> edge_index(Edge e) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

/// Colour class per edge index of the owning graph.
struct EdgeColoring {
  int colours = 2;
  std::vector<std::uint8_t> colour;
};

/// Edge sets of the colour classes, in edge-index order.
std::vector<std::vector<Edge>> colour_classes(const Graph& g, const EdgeColoring& c);

// Named families.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);
/// K5 minus the edge {3,4}; vertices 0,1,2 have degree 4.
Graph k5_minus_e();
/// Two K4 on {0,1,2,3} and {2,3,4,5} sharing the edge {2,3}.
Graph k4_vee_k4();

enum class GraphTag { K5minusE, K4veeK4, K35, Kn, Cn, Custom };

struct NamedGraph {
  GraphTag tag = GraphTag::Custom;
  int param = 0;  // n for Kn / Cn
  Graph graph;
};

NamedGraph make_named(GraphTag tag, int param = 0);
std::string tag_name(GraphTag tag);

// Derived graphs. Vertex ids are preserved unless stated otherwise.
Graph remove_edge(const Graph& g, Edge e);
Graph add_edges(const Graph& g, int new_vertices, std::span<const Edge> extra);

/// Subgraph induced by `vertices`; vertex i of the result is the i-th
/// smallest id of `vertices`.
Graph induced_subgraph(const Graph& g, std::vector<int> vertices);
int induced_edge_count(const Graph& g, std::span<const int> vertices);

struct Relabeled {
  Graph graph;
  std::vector<int> original;  // new id -> old id
};

/// Deletes all isolated vertices, shifting ids down.
Relabeled drop_isolated(const Graph& g);
/// Deletes one vertex (must be isolated), shifting larger ids down by one.
Graph drop_vertex(const Graph& g, int v);

/// Contracts e = {u,v}: the merged vertex keeps id min(u,v), ids above
/// max(u,v) shift down by one, parallel edges coalesce, loops vanish.
Graph contract_edge(const Graph& g, Edge e);

/// Number of common neighbours of the endpoints of e.
int triangle_count(const Graph& g, Edge e);

struct StructuralReport {
  int min_degree = 0;
  int max_degree = 0;
  bool is_2_connected = false;
  bool is_bipartite = false;
  int component_count = 0;
};

StructuralReport structural_report(const Graph& g);
bool is_acyclic(int n, std::span<const Edge> edges);

/// Uniform graph with exactly e edges on n vertices: partial Fisher-Yates
/// over the vertex pairs driven by raw mt19937_64 output, so the result
/// depends only on (n, e, seed).
Graph random_graph(int n, int e, std::uint64_t seed);

}  // namespace mrc
