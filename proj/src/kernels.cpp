#include "mrc/kernels.hpp"

#include <limits>

#include "mrc/errors.hpp"

namespace mrc::kernels {

namespace {

int find(std::vector<int>& parent, int base, int x) {
  while (parent[base + x] != x) {
    parent[base + x] = parent[base + parent[base + x]];
    x = parent[base + x];
  }
  return x;
}

// Per-colour union-find; true when some colour class closes a cycle.
bool has_mono_cycle(const Graph& g, const std::uint8_t* colour, int r, std::vector<int>& parent) {
  const int n = g.vertex_count();
  for (int c = 0; c < r; ++c)
    for (int v = 0; v < n; ++v) parent[c * n + v] = v;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int base = colour[i] * n;
    int a = find(parent, base, edges[i].u);
    int b = find(parent, base, edges[i].v);
    if (a == b) return true;
    parent[base + a] = b;
  }
  return false;
}

void decode(std::uint64_t index, int r, std::vector<std::uint8_t>& colour) {
  colour[0] = 0;
  if (r == 2) {
    const std::uint64_t code = index ^ (index >> 1);
    for (std::size_t j = 1; j < colour.size(); ++j)
      colour[j] = static_cast<std::uint8_t>((code >> (j - 1)) & 1u);
  } else {
    for (std::size_t j = 1; j < colour.size(); ++j) {
      colour[j] = static_cast<std::uint8_t>(index % static_cast<std::uint64_t>(r));
      index /= static_cast<std::uint64_t>(r);
    }
  }
}

// Scans [begin, end) and returns the first good index, stopping early once
// `stop_at` is reached.
std::optional<std::uint64_t> scan_range(const Graph& g, int r, std::uint64_t begin,
                                        std::uint64_t end, const std::atomic<std::uint64_t>* stop_at) {
  std::vector<std::uint8_t> colour(static_cast<std::size_t>(g.edge_count()), 0);
  std::vector<int> parent(static_cast<std::size_t>(r * g.vertex_count()));
  for (std::uint64_t i = begin; i < end; ++i) {
    if (stop_at && (i & 1023u) == 0 && i >= stop_at->load(std::memory_order_relaxed))
      return std::nullopt;
    decode(i, r, colour);
    if (!has_mono_cycle(g, colour.data(), r, parent)) return i;
  }
  return std::nullopt;
}

}  // namespace

std::uint64_t colouring_space(int edges, int r) {
  if (edges <= 0) return 1;
  std::uint64_t total = 1;
  for (int i = 1; i < edges; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(r))
      throw BudgetExceeded("colouring space does not fit in 64 bits");
    total *= static_cast<std::uint64_t>(r);
  }
  return total;
}

std::vector<std::uint8_t> colouring_at(std::uint64_t index, int edges, int r) {
  std::vector<std::uint8_t> colour(static_cast<std::size_t>(edges), 0);
  if (edges > 0) decode(index, r, colour);
  return colour;
}

ScanResult scan_colourings_serial(const Graph& g, int r) {
  const std::uint64_t total = colouring_space(g.edge_count(), r);
  if (g.edge_count() == 0) return {0, 1};
  auto first = scan_range(g, r, 0, total, nullptr);
  return {first, first ? *first + 1 : total};
}

ScanResult scan_colourings_parallel(const Graph& g, int r, int jobs) {
  const std::uint64_t total = colouring_space(g.edge_count(), r);
  if (g.edge_count() == 0) return {0, 1};
  const std::uint64_t chunks = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(jobs) * 64);
  const std::uint64_t step = (total + chunks - 1) / chunks;
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * step;
    const std::uint64_t end = std::min(total, begin + step);
    if (begin >= end || begin >= best.load()) continue;
    if (auto hit = scan_range(g, r, begin, end, &best)) {
      std::uint64_t cur = best.load();
      while (*hit < cur && !best.compare_exchange_weak(cur, *hit)) {
      }
    }
  }
  const std::uint64_t b = best.load();
  if (b == std::numeric_limits<std::uint64_t>::max()) return {std::nullopt, total};
  return {b, b + 1};
}

std::vector<Edge> pair_table(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  return pairs;
}

SmallGraph small_from_mask(int n, std::uint64_t mask, const std::vector<Edge>& pairs) {
  SmallGraph g;
  g.n = n;
  while (mask) {
    const int i = std::countr_zero(mask);
    mask &= mask - 1;
    const Edge e = pairs[static_cast<std::size_t>(i)];
    g.adj[e.u] |= 1u << e.v;
    g.adj[e.v] |= 1u << e.u;
  }
  return g;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  const auto pairs = pair_table(n);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if ((mask >> i) & 1u) es.push_back(pairs[i]);
  return Graph(n, std::move(es));
}

int small_edge_count(const SmallGraph& g) {
  int sum = 0;
  for (int v = 0; v < g.n; ++v) sum += std::popcount(g.adj[v]);
  return sum / 2;
}

int small_min_degree(const SmallGraph& g) {
  int best = g.n;
  for (int v = 0; v < g.n; ++v) best = std::min(best, std::popcount(g.adj[v]));
  return best;
}

namespace {

bool connected_without(const SmallGraph& g, std::uint32_t alive) {
  if (alive == 0) return true;
  std::uint32_t seen = alive & (~alive + 1);
  std::uint32_t frontier = seen;
  while (frontier) {
    const int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    const std::uint32_t next = g.adj[v] & alive & ~seen;
    seen |= next;
    frontier |= next;
  }
  return seen == alive;
}

}  // namespace

bool small_is_2_connected(const SmallGraph& g) {
  if (g.n < 3) return false;
  const std::uint32_t all = (g.n == 32) ? ~0u : ((1u << g.n) - 1);
  if (!connected_without(g, all)) return false;
  for (int v = 0; v < g.n; ++v)
    if (!connected_without(g, all & ~(1u << v))) return false;
  return true;
}

bool small_every_edge_in_two_triangles(const SmallGraph& g) {
  for (int u = 0; u < g.n; ++u) {
    std::uint32_t higher = g.adj[u] & ~((2u << u) - 1);
    while (higher) {
      const int v = std::countr_zero(higher);
      higher &= higher - 1;
      if (std::popcount(g.adj[u] & g.adj[v]) < 2) return false;
    }
  }
  return true;
}

bool small_is_minimal_ramsey2(const SmallGraph& g) {
  if (small_edge_count(g) != 2 * g.n - 1) return false;
  const std::uint32_t all = (1u << g.n) - 1;
  for (std::uint32_t s = 1; s < all; ++s) {
    const int size = std::popcount(s);
    if (size < 2) continue;
    int twice = 0;
    std::uint32_t rest = s;
    while (rest) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      twice += std::popcount(g.adj[v] & s);
    }
    if (twice / 2 > 2 * size - 2) return false;
  }
  return true;
}

}  // namespace mrc::kernels
