#include "mrc/isomorphism.hpp"

#include <algorithm>
#include <optional>

#include "mrc/graph_io.hpp"

namespace mrc {

namespace {

using Partition = std::vector<std::vector<int>>;

// Splits cells by neighbour counts into every current cell until stable.
// Split cells are ordered by signature, so the result depends only on the
// isomorphism type of (graph, partition).
void refine(const Graph& g, Partition& cells) {
  const int n = g.vertex_count();
  std::vector<int> cell_of(static_cast<std::size_t>(n));
  while (true) {
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
    Partition next;
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, int>> keyed;
      for (int v : cell) {
        std::vector<int> sig(cells.size(), 0);
        for (int w : g.neighbors(v)) ++sig[cell_of[w]];
        keyed.emplace_back(std::move(sig), v);
      }
      std::sort(keyed.begin(), keyed.end());
      std::vector<int> group{keyed[0].second};
      for (std::size_t i = 1; i < keyed.size(); ++i) {
        if (keyed[i].first != keyed[i - 1].first) {
          next.push_back(std::move(group));
          group.clear();
        }
        group.push_back(keyed[i].second);
      }
      next.push_back(std::move(group));
    }
    const bool stable = next.size() == cells.size();
    cells = std::move(next);
    if (stable) return;
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g) {}

  Graph run() {
    Partition start;
    if (g_.vertex_count() > 0) {
      std::vector<int> all(static_cast<std::size_t>(g_.vertex_count()));
      for (int v = 0; v < g_.vertex_count(); ++v) all[v] = v;
      start.push_back(std::move(all));
    }
    search(std::move(start));
    return Graph(g_.vertex_count(), best_.value_or(std::vector<Edge>{}));
  }

 private:
  void search(Partition cells) {
    refine(g_, cells);
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size()))
        target = c;
    if (target == cells.size()) {
      std::vector<int> label(static_cast<std::size_t>(g_.vertex_count()));
      for (std::size_t c = 0; c < cells.size(); ++c) label[cells[c][0]] = static_cast<int>(c);
      std::vector<Edge> es;
      for (const auto& e : g_.edges()) es.push_back(make_edge(label[e.u], label[e.v]));
      std::sort(es.begin(), es.end());
      if (!best_ || es < *best_) best_ = std::move(es);
      return;
    }
    for (int v : cells[target]) {
      Partition child;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int w : cells[c])
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      search(std::move(child));
    }
  }

  const Graph& g_;
  std::optional<std::vector<Edge>> best_;
};

}  // namespace

Graph canonical_form(const Graph& g) { return CanonicalSearch(g).run(); }

std::string canonical_key(const Graph& g) { return to_graph6(canonical_form(g)); }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

namespace {

bool extend_map(const Graph& a, const Graph& b, std::vector<int>& phi, std::vector<char>& used, int v) {
  if (v == a.vertex_count()) return true;
  for (int w = 0; w < b.vertex_count(); ++w) {
    if (used[w] || a.degree(v) != b.degree(w)) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) ok = a.has_edge(u, v) == b.has_edge(phi[u], w);
    if (!ok) continue;
    phi[v] = w;
    used[w] = 1;
    if (extend_map(a, b, phi, used, v + 1)) return true;
    used[w] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
  if (!is_isomorphic(a, b)) return std::nullopt;
  std::vector<int> phi(static_cast<std::size_t>(a.vertex_count()), -1);
  std::vector<char> used(static_cast<std::size_t>(b.vertex_count()), 0);
  if (!extend_map(a, b, phi, used, 0)) return std::nullopt;
  return phi;
}

}  // namespace mrc
