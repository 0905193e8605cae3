#include "mrc/oracle.hpp"

#include <algorithm>
#include <deque>

#include "mrc/errors.hpp"
#include "mrc/kernels.hpp"
#include "mrc/union_find.hpp"

namespace mrc {

namespace {

// Path between a and b inside the forest formed by `edges`.
std::vector<int> tree_path(int n, const std::vector<Edge>& edges, int a, int b) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> prev(static_cast<std::size_t>(n), -1);
  prev[a] = a;
  std::deque<int> q{a};
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int y : adj[x])
      if (prev[y] < 0) {
        prev[y] = x;
        q.push_back(y);
      }
  }
  std::vector<int> path;
  for (int x = b; x != a; x = prev[x]) path.push_back(x);
  path.push_back(a);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::optional<MonochromaticCycle> find_monochromatic_cycle(const Graph& g, const EdgeColoring& c) {
  const auto classes = colour_classes(g, c);
  for (int colour = 0; colour < c.colours; ++colour) {
    UnionFind uf(g.vertex_count());
    std::vector<Edge> forest;
    for (const auto& e : classes[colour]) {
      if (uf.unite(e.u, e.v)) {
        forest.push_back(e);
        continue;
      }
      return MonochromaticCycle{colour, tree_path(g.vertex_count(), forest, e.u, e.v)};
    }
  }
  return std::nullopt;
}

ColoringSearchResult is_ramsey_bruteforce(const Graph& g, int r, const OracleOptions& options) {
  if (r != 2 && r != 3) throw PreconditionError("brute force supports r = 2 or r = 3");
  const int e = g.edge_count();
  if (r == 2 && e > options.budget_edges)
    throw BudgetExceeded(std::to_string(e) + " edges exceed the brute-force budget of " +
                         std::to_string(options.budget_edges) + "; use the sparsity checker");
  if (r == 3) {
    const std::uint64_t limit = kernels::colouring_space(options.budget_edges, 2);
    if (e > 2 * options.budget_edges || kernels::colouring_space(e, 3) > limit)
      throw BudgetExceeded("3-colouring space exceeds the brute-force budget");
  }
  auto scan = options.jobs > 1 ? kernels::scan_colourings_parallel(g, r, options.jobs)
                               : kernels::scan_colourings_serial(g, r);
  ColoringSearchResult out;
  out.colorings_examined = scan.examined;
  out.is_ramsey = !scan.first_good.has_value();
  if (scan.first_good)
    out.good_coloring = EdgeColoring{r, kernels::colouring_at(*scan.first_good, e, r)};
  return out;
}

namespace {

class Colourer {
 public:
  explicit Colourer(const Graph& g) : g_(g), colour_(static_cast<std::size_t>(g.vertex_count()), -1) {}

  bool colourable(int k) {
    std::fill(colour_.begin(), colour_.end(), -1);
    k_ = k;
    return extend(0, 0);
  }

 private:
  // Uncoloured vertex with most distinct neighbour colours, then highest
  // degree, then smallest id.
  int pick() const {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < g_.vertex_count(); ++v) {
      if (colour_[v] >= 0) continue;
      std::uint64_t seen = 0;
      for (int w : g_.neighbors(v))
        if (colour_[w] >= 0 && colour_[w] < 64) seen |= std::uint64_t{1} << colour_[w];
      const int sat = std::popcount(seen);
      if (sat > best_sat || (sat == best_sat && g_.degree(v) > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = g_.degree(v);
      }
    }
    return best;
  }

  bool extend(int coloured, int used) {
    if (coloured == g_.vertex_count()) return true;
    const int v = pick();
    for (int c = 0; c < std::min(k_, used + 1); ++c) {
      bool clash = false;
      for (int w : g_.neighbors(v))
        if (colour_[w] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      colour_[v] = c;
      if (extend(coloured + 1, std::max(used, c + 1))) return true;
      colour_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  std::vector<int> colour_;
  int k_ = 0;
};

}  // namespace

int chromatic_number(const Graph& g, int budget_vertices) {
  const int n = g.vertex_count();
  if (n > budget_vertices)
    throw BudgetExceeded(std::to_string(n) + " vertices exceed the chromatic-number budget of " +
                         std::to_string(budget_vertices));
  if (n == 0) return 0;
  if (g.edge_count() == 0) return 1;
  if (structural_report(g).is_bipartite) return 2;
  Colourer colourer(g);
  for (int k = 3; k < n; ++k)
    if (colourer.colourable(k)) return k;
  return n;
}

bool is_ramsey_odd_cyclicity(const Graph& g, int r, int budget_vertices) {
  if (r < 1 || r > 5) throw PreconditionError("odd-cyclicity check supports 1 <= r <= 5");
  return chromatic_number(g, budget_vertices) >= (1 << r) + 1;
}

}  // namespace mrc
