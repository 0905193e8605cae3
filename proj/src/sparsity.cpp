#include "mrc/sparsity.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "mrc/errors.hpp"
#include "mrc/union_find.hpp"

namespace mrc {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (d <= 0) throw PreconditionError("rational needs a positive denominator");
  const auto g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

namespace {

// (k,l)-pebble game over a multigraph. Each vertex starts with k pebbles;
// an accepted edge is oriented away from the vertex that paid the pebble, so
// pebbles(v) + outdeg(v) = k holds throughout.
class PebbleGame {
 public:
  PebbleGame(int n, int k, int l)
      : k_(k), l_(l), pebbles_(static_cast<std::size_t>(n), k), out_(static_cast<std::size_t>(n)) {}

  bool insert(int u, int v) {
    while (pebbles_[u] < k_ && gather(u, v)) {
    }
    while (pebbles_[v] < k_ && gather(v, u)) {
    }
    if (pebbles_[u] + pebbles_[v] < l_ + 1) return false;
    if (pebbles_[u] > 0) {
      --pebbles_[u];
      out_[u].push_back(v);
    } else {
      --pebbles_[v];
      out_[v].push_back(u);
    }
    return true;
  }

  // Vertices reachable from u or v along oriented edges. After a rejected
  // insert this set spans exactly k|V'| - l accepted edges.
  std::vector<int> reach(int u, int v) const {
    std::vector<char> seen(pebbles_.size(), 0);
    std::vector<int> stack{u, v}, out;
    seen[u] = seen[v] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      out.push_back(x);
      for (int y : out_[x])
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  // Moves one free pebble to `at` by reversing a directed path, never
  // passing through `avoid`.
  bool gather(int at, int avoid) {
    const std::size_t n = pebbles_.size();
    std::vector<int> parent(n, -2);
    parent[at] = -1;
    parent[avoid] = -3;
    std::vector<int> stack{at};
    int found = -1;
    while (!stack.empty() && found < 0) {
      int x = stack.back();
      stack.pop_back();
      for (int y : out_[x]) {
        if (parent[y] != -2) continue;
        parent[y] = x;
        if (pebbles_[y] > 0) {
          found = y;
          break;
        }
        stack.push_back(y);
      }
    }
    if (found < 0) return false;
    for (int c = found; parent[c] != -1; c = parent[c]) {
      int p = parent[c];
      auto& edges = out_[p];
      edges.erase(std::find(edges.begin(), edges.end(), c));
      out_[c].push_back(p);
    }
    --pebbles_[found];
    ++pebbles_[at];
    return true;
  }

  int k_;
  int l_;
  std::vector<int> pebbles_;
  std::vector<std::vector<int>> out_;
};

std::int64_t induced_count(std::span<const Edge> edges, std::span<const int> subset, int n) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int v : subset) in[v] = 1;
  std::int64_t c = 0;
  for (const auto& e : edges) c += in[e.u] && in[e.v];
  return c;
}

bool violates(std::span<const Edge> edges, std::span<const int> subset, int n, int k, int l) {
  const auto e = induced_count(edges, subset, n);
  return e >= 1 && e > static_cast<std::int64_t>(k) * static_cast<std::int64_t>(subset.size()) - l;
}

// Deletes vertices in ascending order while the set keeps violating, until
// no single deletion does.
std::vector<int> shrink_witness(std::span<const Edge> edges, std::vector<int> w, int n, int k,
                                int l) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::vector<int> smaller = w;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
      if (violates(edges, smaller, n, k, l)) {
        w = std::move(smaller);
        changed = true;
        break;
      }
    }
  }
  return w;
}

// Runs the game over `edges` (repeats allowed) and returns the witness of
// the first rejected edge, if any.
std::optional<std::vector<int>> pebble_witness(int n, std::span<const Edge> edges, int k, int l) {
  PebbleGame game(n, k, l);
  for (const auto& e : edges)
    if (!game.insert(e.u, e.v)) return game.reach(e.u, e.v);
  return std::nullopt;
}

// Matroid-union augmentation: inserts edges one at a time, moving edges
// between forests along a shortest exchange path when the new edge closes a
// cycle in every forest.
class ForestPartition {
 public:
  ForestPartition(const Graph& g, int r)
      : g_(g), r_(r), which_(static_cast<std::size_t>(g.edge_count()), -1) {}

  bool insert(int edge) {
    const int m = g_.edge_count();
    std::vector<int> label(static_cast<std::size_t>(m), -1);
    constexpr int kRoot = -2;
    label[edge] = kRoot;
    std::deque<int> queue{edge};
    auto adjacency = build_adjacency();
    while (!queue.empty()) {
      int f = queue.front();
      queue.pop_front();
      const Edge ef = g_.edges()[f];
      for (int i = 0; i < r_; ++i) {
        if (which_[f] == i) continue;
        auto path = forest_path(adjacency[i], ef.u, ef.v);
        if (!path) {
          int cur = f, dest = i;
          while (true) {
            int old = which_[cur];
            which_[cur] = dest;
            if (label[cur] == kRoot) break;
            dest = old;
            cur = label[cur];
          }
          return true;
        }
        for (int h : *path)
          if (label[h] == -1) {
            label[h] = f;
            queue.push_back(h);
          }
      }
    }
    return false;
  }

  ForestDecomposition result() const {
    ForestDecomposition out(static_cast<std::size_t>(r_));
    for (int i = 0; i < g_.edge_count(); ++i) out[which_[i]].push_back(g_.edges()[i]);
    return out;
  }

 private:
  // Per forest: vertex -> (neighbour, edge index).
  std::vector<std::vector<std::vector<std::pair<int, int>>>> build_adjacency() const {
    std::vector<std::vector<std::vector<std::pair<int, int>>>> adj(
        static_cast<std::size_t>(r_),
        std::vector<std::vector<std::pair<int, int>>>(static_cast<std::size_t>(g_.vertex_count())));
    for (int i = 0; i < g_.edge_count(); ++i) {
      if (which_[i] < 0) continue;
      const Edge e = g_.edges()[i];
      adj[which_[i]][e.u].push_back({e.v, i});
      adj[which_[i]][e.v].push_back({e.u, i});
    }
    return adj;
  }

  // Edge indices of the tree path from a to b, or nullopt if disconnected.
  static std::optional<std::vector<int>> forest_path(
      const std::vector<std::vector<std::pair<int, int>>>& adj, int a, int b) {
    std::vector<int> via(adj.size(), -1), prev(adj.size(), -1);
    std::vector<char> seen(adj.size(), 0);
    std::deque<int> q{a};
    seen[a] = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      if (x == b) break;
      for (auto [y, idx] : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          prev[y] = x;
          via[y] = idx;
          q.push_back(y);
        }
    }
    if (!seen[b]) return std::nullopt;
    std::vector<int> path;
    for (int x = b; x != a; x = prev[x]) path.push_back(via[x]);
    return path;
  }

  const Graph& g_;
  int r_;
  std::vector<int> which_;
};

}  // namespace

SparsityVerdict is_kl_sparse(const Graph& g, int k, int l) {
  if (k < 1 || l < 0 || l >= 2 * k)
    throw PreconditionError("(k,l)-sparsity needs k >= 1 and 0 <= l < 2k");
  auto w = pebble_witness(g.vertex_count(), g.edges(), k, l);
  if (!w) return {true, std::nullopt};
  return {false, shrink_witness(g.edges(), std::move(*w), g.vertex_count(), k, l)};
}

std::variant<ForestDecomposition, DenseWitness> decompose_into_forests(const Graph& g, int r) {
  if (r < 1) throw PreconditionError("need at least one forest");
  ForestPartition partition(g, r);
  for (int i = 0; i < g.edge_count(); ++i) {
    if (partition.insert(i)) continue;
    auto verdict = is_kl_sparse(g, r, r);
    if (verdict.sparse)
      throw TheoremViolation("forest augmentation failed on an (r,r)-sparse graph");
    return DenseWitness{*verdict.witness};
  }
  return partition.result();
}

RamseyCertificate is_ramsey_cyclicity(const Graph& g, int r) {
  if (r < 2) throw PreconditionError("number of colours must be at least 2");
  RamseyCertificate cert;
  auto verdict = is_kl_sparse(g, r, r);
  if (!verdict.sparse) {
    cert.verdict = RamseyVerdict::Ramsey;
    cert.dense_witness = std::move(verdict.witness);
    return cert;
  }
  auto parts = decompose_into_forests(g, r);
  if (!std::holds_alternative<ForestDecomposition>(parts))
    throw TheoremViolation("sparse graph has no forest decomposition");
  cert.verdict = RamseyVerdict::NotRamsey;
  cert.decomposition = std::get<ForestDecomposition>(std::move(parts));
  return cert;
}

// Minimality only needs single-edge deletions: a minimal graph has no
// isolated vertex, so every proper subgraph lies inside some G - f (or is
// G minus isolated vertices, which the edge count already excludes).
MinimalityVerdict is_minimal_ramsey(const Graph& g, int r) {
  if (r < 2) throw PreconditionError("number of colours must be at least 2");
  if (is_kl_sparse(g, r, r).sparse) return {false, MinimalityReason::NotRamsey};
  const MinimalityVerdict not_minimal{false, MinimalityReason::RamseyNotMinimal};
  const int n = g.vertex_count();
  if (g.edge_count() != r * n - (r - 1)) return not_minimal;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0) return not_minimal;
  std::vector<Edge> rest(g.edges().begin(), g.edges().end());
  for (int i = 0; i < g.edge_count(); ++i) {
    Edge removed = rest[i];
    rest.erase(rest.begin() + i);
    bool sparse = !pebble_witness(n, rest, r, r).has_value();
    rest.insert(rest.begin() + i, removed);
    if (!sparse) return not_minimal;
  }
  return {true, MinimalityReason::Minimal};
}

FractionalArboricity fractional_arboricity(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw PreconditionError("arboricity needs at least two vertices");
  const int m = g.edge_count();
  if (m == 0) return {Rational(0, 1), {0, 1}};

  std::vector<Rational> candidates;
  for (int v = 2; v <= n; ++v)
    for (int e = v - 1; e <= std::min(m, v * (v - 1) / 2); ++e) candidates.emplace_back(e, v - 1);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // Some subgraph J has e(J)/(v(J)-1) > p/q iff the q-fold multigraph is not
  // (p,p)-sparse.
  auto denser_than = [&](const Rational& c) {
    std::vector<Edge> multi;
    multi.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(c.den));
    for (const auto& e : g.edges())
      for (std::int64_t i = 0; i < c.den; ++i) multi.push_back(e);
    return pebble_witness(n, multi, static_cast<int>(c.num), static_cast<int>(c.num));
  };

  // candidates[0] = 1 is attained by any edge; find the first candidate no
  // subgraph exceeds.
  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (denser_than(candidates[mid]))
      lo = mid + 1;
    else
      hi = mid;
  }
  FractionalArboricity out;
  out.value = candidates[lo];
  if (lo == 0) {
    const Edge e = g.edges()[0];
    out.argmax_witness = {e.u, e.v};
  } else {
    auto w = denser_than(candidates[lo - 1]);
    if (!w) throw TheoremViolation("arboricity search lost its witness");
    out.argmax_witness = std::move(*w);
  }
  const auto e = induced_edge_count(g, out.argmax_witness);
  if (Rational(e, static_cast<std::int64_t>(out.argmax_witness.size()) - 1) != out.value)
    throw TheoremViolation("arboricity witness does not attain the maximum");
  return out;
}

bool is_valid_decomposition(const Graph& g, const ForestDecomposition& forests) {
  std::vector<Edge> all;
  for (const auto& f : forests) {
    for (const auto& e : f)
      if (e.u < 0 || e.v < 0 || e.u >= g.vertex_count() || e.v >= g.vertex_count()) return false;
    if (!is_acyclic(g.vertex_count(), f)) return false;
    all.insert(all.end(), f.begin(), f.end());
  }
  std::sort(all.begin(), all.end());
  return std::equal(all.begin(), all.end(), g.edges().begin(), g.edges().end());
}

}  // namespace mrc
