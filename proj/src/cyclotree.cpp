#include "mrc/cyclotree.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <limits>
#include <map>
#include <set>

#include "mrc/errors.hpp"
#include "mrc/isomorphism.hpp"
#include "mrc/sparsity.hpp"
#include "mrc/union_find.hpp"

namespace mrc {

std::string build_kind_name(BuildKind kind) {
  switch (kind) {
    case BuildKind::BaseCase: return "base_case";
    case BuildKind::CreateSpace: return "create_space";
    case BuildKind::EnlargeCycle: return "enlarge_cycle";
    case BuildKind::GrowTree: return "grow_tree";
    case BuildKind::ExtendBranch: return "extend_branch";
    case BuildKind::NewBranch: return "new_branch";
  }
  return "?";
}

void validate_forest(const ForestOfCycles& f) {
  const int n = f.vertex_count;
  if (f.cycles.empty()) throw PreconditionError("a forest of cycles needs at least one cycle");
  std::vector<int> uses(static_cast<std::size_t>(n), 0);
  std::map<Edge, int> edge_owner;
  for (std::size_t i = 0; i < f.cycles.size(); ++i) {
    const auto& c = f.cycles[i];
    if (c.size() < 3)
      throw PreconditionError("cycle " + std::to_string(i) + " has length " + std::to_string(c.size()) + " < 3");
    auto sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw PreconditionError("cycle " + std::to_string(i) + " repeats a vertex");
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] < 0 || c[j] >= n) throw PreconditionError("cycle vertex outside 0.." + std::to_string(n - 1));
      ++uses[c[j]];
      const Edge e = make_edge(c[j], c[(j + 1) % c.size()]);
      auto [it, fresh] = edge_owner.emplace(e, static_cast<int>(i));
      if (!fresh)
        throw PreconditionError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} lies in cycles " +
                                std::to_string(it->second) + " and " + std::to_string(i));
    }
  }
  for (int v = 0; v < n; ++v)
    if (uses[v] == 0) throw PreconditionError("vertex " + std::to_string(v) + " lies on no cycle");
  for (std::size_t i = 0; i < f.cycles.size(); ++i)
    for (std::size_t j = i + 1; j < f.cycles.size(); ++j) {
      int shared = 0;
      for (int v : f.cycles[i]) shared += std::count(f.cycles[j].begin(), f.cycles[j].end(), v) > 0;
      if (shared >= 2)
        throw PreconditionError("cycles " + std::to_string(i) + " and " + std::to_string(j) + " share " +
                                std::to_string(shared) + " vertices");
    }
  // vertex/cycle incidence must be a forest
  UnionFind uf(n + static_cast<int>(f.cycles.size()));
  for (std::size_t i = 0; i < f.cycles.size(); ++i)
    for (int v : f.cycles[i])
      if (!uf.unite(v, n + static_cast<int>(i)))
        throw PreconditionError("cycles close a ring through shared vertices (at cycle " + std::to_string(i) + ")");
  const int e = static_cast<int>(edge_owner.size());
  if (e < n || 2 * e > 3 * (n - 1)) throw TheoremViolation("forest of cycles breaks n <= e <= 3(n-1)/2");
}

ForestOfCycles parse_forest(const std::vector<std::vector<int>>& cycles) {
  ForestOfCycles f;
  for (const auto& c : cycles) f.labels.insert(f.labels.end(), c.begin(), c.end());
  std::sort(f.labels.begin(), f.labels.end());
  f.labels.erase(std::unique(f.labels.begin(), f.labels.end()), f.labels.end());
  f.vertex_count = static_cast<int>(f.labels.size());
  for (const auto& c : cycles) {
    std::vector<int> mapped;
    for (int v : c)
      mapped.push_back(static_cast<int>(std::lower_bound(f.labels.begin(), f.labels.end(), v) - f.labels.begin()));
    f.cycles.push_back(std::move(mapped));
  }
  validate_forest(f);
  return f;
}

Graph forest_graph(const ForestOfCycles& f) {
  std::vector<Edge> es;
  for (const auto& c : f.cycles)
    for (std::size_t j = 0; j < c.size(); ++j) es.push_back(make_edge(c[j], c[(j + 1) % c.size()]));
  return Graph(f.vertex_count, std::move(es));
}

std::vector<ForestOfCycles> all_forests(int max_vertices) {
  std::map<std::string, std::vector<std::vector<int>>> found;
  // hang a cycle on an existing vertex or start a new component
  std::function<void(std::vector<std::vector<int>>, int)> grow = [&](std::vector<std::vector<int>> cs, int v) {
    if (!cs.empty()) found.emplace(canonical_key(forest_graph(parse_forest(cs))), cs);
    for (int len = 3; len <= max_vertices; ++len) {
      if (v + len <= max_vertices) {
        std::vector<int> c;
        for (int i = 0; i < len; ++i) c.push_back(v + i);
        auto next = cs;
        next.push_back(std::move(c));
        grow(std::move(next), v + len);
      }
      if (v + len - 1 <= max_vertices)
        for (int at = 0; at < v; ++at) {
          std::vector<int> c{at};
          for (int i = 0; i + 1 < len; ++i) c.push_back(v + i);
          auto next = cs;
          next.push_back(std::move(c));
          grow(std::move(next), v + len - 1);
        }
    }
  };
  grow({}, 0);
  std::vector<ForestOfCycles> out;
  for (const auto& [key, cs] : found) out.push_back(parse_forest(cs));
  return out;
}

namespace {

const std::vector<Edge> kK5e{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}};
const std::vector<Edge> kK4vK4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                               {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};

std::vector<int> rotate_to(const std::vector<int>& cycle, int start) {
  auto it = std::find(cycle.begin(), cycle.end(), start);
  std::vector<int> out(it, cycle.end());
  out.insert(out.end(), cycle.begin(), it);
  return out;
}

class Builder {
 public:
  Builder(const ForestOfCycles& f, int n)
      : f_(f),
        n_(n),
        host_of_(static_cast<std::size_t>(f.vertex_count), -1),
        cycles_at_(static_cast<std::size_t>(f.vertex_count)),
        placed_(f.cycles.size(), 0),
        ord_(f.cycles.size()),
        k_(f.cycles.size(), 0) {
    for (std::size_t i = 0; i < f.cycles.size(); ++i)
      for (int v : f.cycles[i]) cycles_at_[v].push_back(static_cast<int>(i));
  }

  Embedding run() {
    seed();
    for (std::size_t i = 0; i < f_.cycles.size(); ++i) {
      if (placed_[i]) continue;
      // new component: its first cycle starts at a free host vertex
      const int c = static_cast<int>(i);
      placed_[c] = 1;
      ord_[c] = f_.cycles[c];
      int a = -1;
      for (int h = 0; h < host_size() && a < 0; ++h)
        if (owner_[h] < 0) a = h;
      if (a < 0) a = create_space();
      attach(a, c, true);
      place_cycle(c);
    }
    if (host_size() > n_) throw TheoremViolation("embedding planner overshot the requested order");
    while (host_size() < n_) create_space();

    Embedding emb;
    std::vector<Edge> es;
    for (int a = 0; a < host_size(); ++a)
      for (int b : adj_[a])
        if (a < b) es.push_back({a, b});
    emb.host = Graph(host_size(), std::move(es));
    emb.forest = f_;
    emb.vertex_map = host_of_;
    emb.build_script = std::move(script_);
    return emb;
  }

 private:
  int host_size() const { return static_cast<int>(adj_.size()); }

  int add_vertex() {
    adj_.emplace_back();
    owner_.push_back(-1);
    return host_size() - 1;
  }
  void add(int a, int b) {
    adj_[a].insert(b);
    adj_[b].insert(a);
  }
  void del(int a, int b) {
    adj_[a].erase(b);
    adj_[b].erase(a);
    fcycle_.erase(make_edge(a, b));
  }
  bool is_f(int a, int b) const { return fcycle_.count(make_edge(a, b)) > 0; }
  void mark(int a, int b, int c) { fcycle_[make_edge(a, b)] = c; }
  void map_vertex(int fv, int hv) {
    host_of_[fv] = hv;
    owner_[hv] = fv;
  }
  int c1(int u, int v, int w) {
    const int x = add_vertex();
    add(x, u);
    add(x, v);
    add(x, w);
    del(v, w);
    return x;
  }

  void seed_host(const std::vector<Edge>& edges, int size) {
    for (int i = 0; i < size; ++i) add_vertex();
    for (const auto& e : edges) add(e.u, e.v);
  }

  // Places cycle c with its vertices, in order, on the given host vertices;
  // `prefix` host vertices take c0..c_{k}, `last` takes c_{L-1}.
  void seed_cycle(int c, const std::vector<int>& order, const std::vector<int>& prefix, int last) {
    placed_[c] = 1;
    ord_[c] = order;
    const int L = static_cast<int>(order.size());
    for (std::size_t j = 0; j < prefix.size(); ++j) map_vertex(order[j], prefix[j]);
    map_vertex(order[L - 1], last);
    for (std::size_t j = 0; j + 1 < prefix.size(); ++j) mark(prefix[j], prefix[j + 1], c);
    mark(prefix.back(), last, c);
    mark(last, prefix.front(), c);
    k_[c] = static_cast<int>(prefix.size()) - 1;
  }

  void seed() {
    const auto& cs = f_.cycles;
    const int count = static_cast<int>(cs.size());
    auto shared_vertex = [&](int i, int j) {
      for (int v : cs[i])
        if (std::find(cs[j].begin(), cs[j].end(), v) != cs[j].end()) return v;
      return -1;
    };
    BuildStep step;
    step.kind = BuildKind::BaseCase;
    std::vector<int> roots;

    if (count == 2 && cs[0].size() == 3 && cs[1].size() == 3 && shared_vertex(0, 1) < 0) {
      seed_host(kK4vK4, 6);
      seed_cycle(0, cs[0], {0, 1}, 2);
      seed_cycle(1, cs[1], {3, 4}, 5);
      step.case_id = 6;
      roots = {0, 1};
    }
    for (int i = 0; i < count && roots.empty(); ++i)
      if (cs[i].size() >= 5) {
        seed_host(kK5e, 5);
        seed_cycle(i, cs[i], {0, 3, 1, 4}, 2);
        step.case_id = 3;
        roots = {i};
      }
    for (int i = 0; i < count && roots.empty(); ++i)
      for (int j = i + 1; j < count && roots.empty(); ++j) {
        const int s = shared_vertex(i, j);
        if (s < 0) continue;
        seed_host(kK5e, 5);
        // centre c = 2, triangles c-a-x and c-b-y
        seed_cycle(i, rotate_to(cs[i], s), {2, 0}, 3);
        placed_[j] = 1;
        ord_[j] = rotate_to(cs[j], s);
        map_vertex(ord_[j][1], 1);
        map_vertex(ord_[j].back(), 4);
        mark(2, 1, j);
        mark(1, 4, j);
        mark(4, 2, j);
        k_[j] = 1;
        step.case_id = 4;
        roots = {i, j};
      }
    for (int i = 0; i < count && roots.empty(); ++i)
      if (cs[i].size() == 4) {
        seed_host(kK5e, 5);
        seed_cycle(i, cs[i], {0, 1, 2}, 3);
        step.case_id = 2;
        roots = {i};
      }
    if (roots.empty()) {
      seed_host(kK5e, 5);
      seed_cycle(0, cs[0], {0, 1}, 2);
      step.case_id = 1;
      roots = {0};
    }
    step.cycles = roots;
    script_.push_back(step);
    for (int r : roots) place_cycle(r);
  }

  void enlarge_full(int c) {
    const auto& ord = ord_[c];
    const int L = static_cast<int>(ord.size());
    while (k_[c] < L - 2) {
      const int k = k_[c];
      const int u = host_of_[ord[k - 1]], v = host_of_[ord[k]], w = host_of_[ord[L - 1]];
      const int x = c1(u, v, w);
      mark(x, v, c);
      mark(x, w, c);
      map_vertex(ord[k + 1], x);
      k_[c] = k + 1;
      BuildStep s;
      s.kind = BuildKind::EnlargeCycle;
      s.u = u, s.v = v, s.w = w, s.x = x, s.cycle = c;
      script_.push_back(s);
    }
  }

  // Depth first: finish the cycle, hang every unplaced neighbouring cycle
  // on it as a triangle, then recurse into those.
  void place_cycle(int c) {
    enlarge_full(c);
    std::vector<int> kids;
    for (int fv : ord_[c])
      for (int d : cycles_at_[fv]) {
        if (placed_[d]) continue;
        placed_[d] = 1;
        ord_[d] = rotate_to(f_.cycles[d], fv);
        attach(host_of_[fv], d, false);
        kids.push_back(d);
      }
    for (int d : kids) place_cycle(d);
  }

  void attach(int a, int c, bool grow) {
    const auto& ord = ord_[c];
    BuildStep s;
    s.cycle = c;
    int p = -1, q = -1;
    int b = -1;
    for (int nb : adj_[a])
      if (!is_f(a, nb)) {
        b = nb;
        break;
      }
    if (b >= 0) {
      p = add_vertex();
      q = add_vertex();
      add(a, p);
      add(a, q);
      add(p, q);
      add(p, b);
      add(q, b);
      del(a, b);
      s.kind = grow ? BuildKind::GrowTree : BuildKind::ExtendBranch;
      s.v = a, s.w = b, s.x = p, s.y = q;
    } else {
      int v = -1, w = -1;
      for (int cand : adj_[a]) {
        for (int nb : adj_[cand])
          if (nb != a && !is_f(cand, nb)) {
            w = nb;
            break;
          }
        if (w >= 0) {
          v = cand;
          break;
        }
      }
      if (v < 0) throw TheoremViolation("no non-forest edge near vertex " + std::to_string(a) + " to branch from");
      p = c1(a, v, w);
      q = c1(a, p, v);
      s.kind = BuildKind::NewBranch;
      s.u = a, s.v = v, s.w = w, s.x = p, s.y = q;
    }
    if (grow) map_vertex(ord[0], a);
    map_vertex(ord[1], p);
    map_vertex(ord.back(), q);
    mark(a, p, c);
    mark(a, q, c);
    mark(p, q, c);
    k_[c] = 1;
    script_.push_back(s);
  }

  int create_space() {
    BuildStep s;
    s.kind = BuildKind::CreateSpace;
    for (int v = 0; v < host_size() && s.v < 0; ++v) {
      if (adj_[v].size() != 3) continue;
      std::vector<int> on, off;
      for (int nb : adj_[v]) (is_f(v, nb) ? on : off).push_back(nb);
      if (on.size() != 2) continue;
      s.u = on[0], s.v = v, s.w = off[0];
      s.cycle = fcycle_.at(make_edge(on[0], v));
    }
    for (int v = 0; v < host_size() && s.v < 0; ++v) {
      if (adj_[v].size() != 3) continue;
      s.u = *adj_[v].begin(), s.v = v, s.w = *adj_[v].rbegin();
      s.simulate = true;
    }
    if (s.v < 0) throw TheoremViolation("host has no vertex of degree 3");
    s.x = c1(s.u, s.v, s.w);
    script_.push_back(s);
    return s.x;
  }

  const ForestOfCycles& f_;
  int n_;
  std::vector<int> host_of_;
  std::vector<std::vector<int>> cycles_at_;
  std::vector<char> placed_;
  std::vector<std::vector<int>> ord_;
  std::vector<int> k_;

  std::vector<std::set<int>> adj_;
  std::vector<int> owner_;
  std::map<Edge, int> fcycle_;
  std::vector<BuildStep> script_;
};

using ColourMap = std::map<Edge, std::uint8_t>;

void apply_base_case(const BuildStep& s, const CycleColoring& cc, ColourMap& col) {
  auto set = [&](std::initializer_list<Edge> es, int c) {
    for (const auto& e : es) col[e] = static_cast<std::uint8_t>(c);
  };
  const int g1 = cc.colour[s.cycles[0]];
  switch (s.case_id) {
    case 1:  // triangle abc
      set({{0, 1}, {1, 2}, {0, 2}, {0, 4}, {2, 3}}, g1);
      set({{0, 3}, {1, 3}, {1, 4}, {2, 4}}, 1 - g1);
      break;
    case 2:  // C4 a-b-c-x
      set({{0, 1}, {1, 2}, {2, 3}, {0, 3}, {2, 4}}, g1);
      set({{1, 3}, {1, 4}, {0, 4}, {0, 2}}, 1 - g1);
      break;
    case 3:  // C5 a-x-b-y-c
      set({{0, 3}, {1, 3}, {1, 4}, {2, 4}, {0, 2}}, g1);
      set({{0, 1}, {1, 2}, {0, 4}, {2, 3}}, 1 - g1);
      break;
    case 4: {  // bowtie at c: c-a-x and c-b-y
      const int g2 = cc.colour[s.cycles[1]];
      set({{0, 2}, {0, 3}, {2, 3}}, g1);
      set({{1, 2}, {1, 4}, {2, 4}}, g2);
      if (g1 == g2) {
        set({{0, 1}, {0, 4}, {1, 3}}, 1 - g1);
      } else {
        set({{0, 1}, {0, 4}}, g1);
        set({{1, 3}}, g2);
      }
      break;
    }
    case 6: {  // triangles 012 and 345 in K4vK4
      const int g2 = cc.colour[s.cycles[1]];
      set({{0, 1}, {0, 2}, {1, 2}}, g1);
      set({{3, 4}, {3, 5}, {4, 5}}, g2);
      if (g1 == g2) {
        set({{0, 3}, {1, 3}, {2, 3}, {2, 4}, {2, 5}}, 1 - g1);
      } else {
        set({{0, 3}, {1, 3}}, g2);
        set({{2, 3}, {2, 4}, {2, 5}}, g1);
      }
      break;
    }
    default: throw PreconditionError("unknown base case " + std::to_string(s.case_id));
  }
}

std::uint8_t take(ColourMap& col, int a, int b) {
  auto it = col.find(make_edge(a, b));
  if (it == col.end()) throw PreconditionError("build script refers to a missing edge");
  const auto c = it->second;
  col.erase(it);
  return c;
}

void apply_step(const BuildStep& s, const CycleColoring& cc, ColourMap& col) {
  auto set = [&](int a, int b, int c) { col[make_edge(a, b)] = static_cast<std::uint8_t>(c); };
  switch (s.kind) {
    case BuildKind::BaseCase: apply_base_case(s, cc, col); break;
    case BuildKind::CreateSpace: {
      const int old = take(col, s.v, s.w);
      if (s.simulate) {
        set(s.x, s.v, old);
        set(s.x, s.w, old);
        set(s.x, s.u, 1 - old);
      } else {
        const int g = cc.colour[s.cycle];
        set(s.x, s.u, g);
        set(s.x, s.v, 1 - g);
        set(s.x, s.w, 1 - g);
      }
      break;
    }
    case BuildKind::EnlargeCycle: {
      const int g = cc.colour[s.cycle];
      take(col, s.v, s.w);
      set(s.x, s.v, g);
      set(s.x, s.w, g);
      set(s.x, s.u, 1 - g);
      break;
    }
    case BuildKind::GrowTree:
    case BuildKind::ExtendBranch: {
      const int t = cc.colour[s.cycle];
      const int old = take(col, s.v, s.w);
      set(s.v, s.x, t);
      set(s.v, s.y, t);
      set(s.x, s.y, t);
      if (t == old) {
        set(s.w, s.x, t);
        set(s.w, s.y, 1 - t);
      } else {
        set(s.w, s.x, old);
        set(s.w, s.y, old);
      }
      break;
    }
    case BuildKind::NewBranch: {
      const int t = cc.colour[s.cycle];
      take(col, s.v, s.w);
      set(s.u, s.x, t);
      set(s.u, s.y, t);
      set(s.x, s.y, t);
      set(s.x, s.w, 1 - t);
      set(s.y, s.v, 1 - t);
      break;
    }
  }
}

void check_domain(const Embedding& emb, const CycleColoring& cc) {
  if (cc.colour.size() != emb.forest.cycles.size())
    throw PreconditionError("cycle colouring has " + std::to_string(cc.colour.size()) + " entries for " +
                            std::to_string(emb.forest.cycles.size()) + " cycles");
  for (auto c : cc.colour)
    if (c > 1) throw PreconditionError("cycle colours must be 0 or 1");
}

// Edges closing a cycle per colour, i.e. the cyclomatic number of each class.
std::array<int, 2> cyclomatic(int n, const ColourMap& col) {
  UnionFind a(n), b(n);
  std::array<int, 2> out{0, 0};
  for (const auto& [e, c] : col)
    if (!(c == 0 ? a : b).unite(e.u, e.v)) ++out[c];
  return out;
}

}  // namespace

Embedding embed(const ForestOfCycles& f, int n) {
  validate_forest(f);
  if (n < 5) throw PreconditionError("host order must be at least 5");
  if (n < f.vertex_count)
    throw PreconditionError("host order " + std::to_string(n) + " is below the forest's " +
                            std::to_string(f.vertex_count) + " vertices");
  return Builder(f, n).run();
}

EdgeColoring extend_coloring(const Embedding& emb, const CycleColoring& cc) {
  check_domain(emb, cc);
  ColourMap col;
  for (const auto& s : emb.build_script) apply_step(s, cc, col);
  EdgeColoring out{2, std::vector<std::uint8_t>(static_cast<std::size_t>(emb.host.edge_count()), 0)};
  if (col.size() != out.colour.size()) throw PreconditionError("build script does not match the host");
  for (const auto& [e, c] : col) {
    auto idx = emb.host.edge_index(e);
    if (!idx) throw PreconditionError("build script does not match the host");
    out.colour[*idx] = c;
  }
  return out;
}

std::optional<std::size_t> first_unsound_step(const Embedding& emb, const CycleColoring& cc) {
  check_domain(emb, cc);
  ColourMap col;
  std::array<int, 2> seeded{0, 0};
  for (std::size_t i = 0; i < emb.build_script.size(); ++i) {
    const auto& s = emb.build_script[i];
    apply_step(s, cc, col);
    if (s.kind == BuildKind::BaseCase)
      for (int c : s.cycles) ++seeded[cc.colour[c]];
    else if (s.cycle >= 0 && s.kind != BuildKind::CreateSpace && s.kind != BuildKind::EnlargeCycle)
      ++seeded[cc.colour[s.cycle]];
    if (cyclomatic(emb.host.vertex_count(), col) != seeded) return i;
  }
  return std::nullopt;
}

bool only_forest_cycles(const Embedding& emb, const CycleColoring& cc, const EdgeColoring& col) {
  std::array<int, 2> expected{0, 0};
  for (auto c : cc.colour) ++expected[c];
  ColourMap m;
  const auto edges = emb.host.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) m[edges[i]] = col.colour[i];
  if (cyclomatic(emb.host.vertex_count(), m) != expected) return false;
  // forest edges must carry their cycle's colour
  for (std::size_t i = 0; i < emb.forest.cycles.size(); ++i) {
    const auto& c = emb.forest.cycles[i];
    for (std::size_t j = 0; j < c.size(); ++j) {
      auto idx = emb.host.edge_index(make_edge(emb.vertex_map[c[j]], emb.vertex_map[c[(j + 1) % c.size()]]));
      if (!idx || col.colour[*idx] != cc.colour[i]) return false;
    }
  }
  return true;
}

namespace {

CycleColoring from_mask(std::uint64_t mask, std::size_t cycles) {
  CycleColoring cc;
  for (std::size_t i = 0; i < cycles; ++i) cc.colour.push_back(static_cast<std::uint8_t>((mask >> i) & 1u));
  return cc;
}

}  // namespace

EmbeddingReport verify_embedding(const Embedding& emb, int expected_n, int jobs) {
  EmbeddingReport r;
  const auto& f = emb.forest;
  const int n = emb.host.vertex_count();
  r.vertex_count_ok = n == expected_n;

  r.subgraph_ok = static_cast<int>(emb.vertex_map.size()) == f.vertex_count;
  if (r.subgraph_ok) {
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int h : emb.vertex_map) {
      if (h < 0 || h >= n || hit[h]) r.subgraph_ok = false;
      else hit[h] = 1;
    }
  }
  const Graph fg = forest_graph(f);
  if (r.subgraph_ok)
    for (const auto& e : fg.edges())
      if (!emb.host.has_edge(emb.vertex_map[e.u], emb.vertex_map[e.v])) r.subgraph_ok = false;

  r.minimal_ok = is_minimal_ramsey(emb.host, 2).minimal;

  const int fe = fg.edge_count();
  if (expected_n == f.vertex_count && f.vertex_count >= 5) {
    const int added = emb.host.edge_count() - fe;
    r.spanning_bound_ok = 2 * added >= f.vertex_count + 1 && added <= f.vertex_count - 1;
  }

  const std::size_t k = f.cycles.size();
  if (k > 30) throw BudgetExceeded("more than 30 cycles: 2^k colourings are out of budget");
  const std::int64_t total = std::int64_t{1} << k;
  r.colourings_checked = static_cast<std::uint64_t>(total);
  if (!r.subgraph_ok) return r;
  std::atomic<std::uint64_t> first_bad{std::numeric_limits<std::uint64_t>::max()};
#pragma omp parallel for schedule(dynamic, 16) num_threads(std::max(1, jobs))
  for (std::int64_t mask = 0; mask < total; ++mask) {
    const auto m = static_cast<std::uint64_t>(mask);
    if (m >= first_bad.load(std::memory_order_relaxed)) continue;
    const auto cc = from_mask(m, k);
    if (!only_forest_cycles(emb, cc, extend_coloring(emb, cc))) {
      auto cur = first_bad.load();
      while (m < cur && !first_bad.compare_exchange_weak(cur, m)) {
      }
    }
  }
  const auto bad = first_bad.load();
  r.colourings_ok = bad == std::numeric_limits<std::uint64_t>::max();
  if (!r.colourings_ok) r.failing_colouring = bad;
  return r;
}

std::vector<int> monochromatic_cycle_lengths(const Graph& g, const EdgeColoring& c) {
  std::set<int> lengths;
  const int n = g.vertex_count();
  for (int colour = 0; colour < c.colours; ++colour) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (c.colour[i] == colour) {
        adj[edges[i].u].push_back(edges[i].v);
        adj[edges[i].v].push_back(edges[i].u);
      }
    // simple cycles with smallest vertex s, walked from s through larger ids
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
      std::function<void(int, int)> dfs = [&](int v, int depth) {
        for (int w : adj[v]) {
          if (w == s && depth >= 3) lengths.insert(depth);
          if (w > s && !on_path[w]) {
            on_path[w] = 1;
            dfs(w, depth + 1);
            on_path[w] = 0;
          }
        }
      };
      on_path[s] = 1;
      dfs(s, 1);
      on_path[s] = 0;
    }
  }
  return {lengths.begin(), lengths.end()};
}

Separation separate_cycle_families(int l, int m) {
  if (l < 5) throw PreconditionError("separation needs l >= 5 (l = 4 is not supported)");
  if (m < 3 || m > l) throw PreconditionError("missing length m must satisfy 3 <= m <= l");
  std::vector<int> cycle(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) cycle[i] = i;
  Separation out;
  out.l = l;
  out.m = m;
  out.embedding = embed(parse_forest({cycle}), std::max(m, 5));
  out.witness = extend_coloring(out.embedding, CycleColoring{{0}});
  if (monochromatic_cycle_lengths(out.embedding.host, out.witness) != std::vector<int>{m})
    throw TheoremViolation("separation witness has a monochromatic cycle of another length");
  return out;
}

}  // namespace mrc
