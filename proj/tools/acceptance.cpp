// Acceptance run: one PASS/FAIL line per criterion, exit 0 only when all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "mrc/constructor.hpp"
#include "mrc/cyclotree.hpp"
#include "mrc/errors.hpp"
#include "mrc/graph_io.hpp"
#include "mrc/isomorphism.hpp"
#include "mrc/kernels.hpp"
#include "mrc/oracle.hpp"
#include "mrc/reducer.hpp"
#include "mrc/sparsity.hpp"

namespace {

using namespace mrc;

// Regression constants: minimal Ramsey graphs (two colours) up to isomorphism.
constexpr std::size_t kMinimalOn5 = 1;
constexpr std::size_t kMinimalOn6 = 5;
constexpr std::size_t kMinimalOn7 = 30;
constexpr std::size_t kMinimalOn8 = 300;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Context {
  int jobs = 1;
  std::vector<Graph> enumerated;  // n = 5..8
  std::vector<Graph> closure_outputs;
};

void ensure_enumerated(Context& ctx) {
  if (!ctx.enumerated.empty()) return;
  for (int n = 5; n <= 8; ++n)
    for (auto& g : enumerate_minimal(n, ctx.jobs)) ctx.enumerated.push_back(std::move(g));
}

std::vector<Graph> all_kinds_outputs(const Graph& g, int& failures, std::string& first_failure) {
  std::vector<Graph> out;
  for (auto kind : {ConstructionKind::C1, ConstructionKind::C2, ConstructionKind::C3})
    for (const auto& site : legal_sites(g, kind)) {
      try {
        out.push_back(apply_construction(g, site, false).after);
      } catch (const TheoremViolation& e) {
        if (failures++ == 0) first_failure = to_graph6(g) + " " + kind_name(kind) + ": " + e.what();
      }
    }
  return out;
}

// Random construction chains from the two bases, recording every graph.
std::vector<Graph> grown_chains(int chains, int max_n, std::uint64_t seed) {
  std::vector<Graph> out;
  std::mt19937_64 rng(seed);
  for (int c = 0; c < chains; ++c) {
    Graph g = c % 2 == 0 ? k5_minus_e() : k4_vee_k4();
    while (true) {
      const auto kind = static_cast<ConstructionKind>(rng() % 3);
      const int grow = kind == ConstructionKind::C1 ? 1 : 2;
      if (g.vertex_count() + grow > max_n) break;
      const auto sites = legal_sites(g, kind);
      if (sites.empty()) continue;
      g = apply_construction(g, sites[rng() % sites.size()], false).after;
      out.push_back(g);
    }
  }
  return out;
}

std::vector<Graph> dedupe(const std::vector<Graph>& gs) {
  std::map<std::string, Graph> seen;
  for (const auto& g : gs) seen.emplace(canonical_key(g), g);
  std::vector<Graph> out;
  for (auto& [k, g] : seen) out.push_back(g);
  return out;
}

Outcome base_membership(Context&) {
  Outcome o;
  std::ostringstream d;
  for (const auto& [name, g] : std::vector<std::pair<std::string, Graph>>{
           {"K5-e", k5_minus_e()}, {"K4vK4", k4_vee_k4()}, {"K3,5", complete_bipartite(3, 5)}}) {
    const bool minimal = is_minimal_ramsey(g, 2).minimal;
    const auto bf = is_ramsey_bruteforce(g, 2);
    bool deletions_colourable = true;
    for (const auto& f : g.edges()) deletions_colourable &= !is_ramsey_bruteforce(remove_edge(g, f), 2).is_ramsey;
    o.pass &= minimal && bf.is_ramsey && deletions_colourable;
    d << name << " " << bf.colorings_examined << " colourings; ";
  }
  o.detail = d.str() + "every single-edge deletion has a good colouring";
  return o;
}

Outcome oracle_equivalence(Context& ctx) {
  Outcome o;
  std::uint64_t graphs = 0;
  for (int n : {5, 6}) {
    const auto pairs = kernels::pair_table(n);
    const int bits = static_cast<int>(pairs.size());
    auto mismatch = kernels::collect_masks_parallel(
        bits, -1,
        [&](std::uint64_t m) {
          const Graph g = kernels::graph_from_mask(n, m);
          const bool pebble = is_ramsey_cyclicity(g, 2).verdict == RamseyVerdict::Ramsey;
          return pebble != is_ramsey_bruteforce(g, 2).is_ramsey;
        },
        ctx.jobs);
    graphs += std::uint64_t{1} << bits;
    if (!mismatch.empty()) {
      o.pass = false;
      o.detail = "mismatch on n=" + std::to_string(n) + " mask " + std::to_string(mismatch[0]) + "; ";
    }
  }
  o.detail += std::to_string(graphs) + " labeled graphs, pebble game = exhaustive scan";
  return o;
}

Outcome enumeration_ground_truth(Context& ctx) {
  ensure_enumerated(ctx);
  Outcome o;
  std::map<int, std::vector<Graph>> by_n;
  for (const auto& g : ctx.enumerated) by_n[g.vertex_count()].push_back(g);
  const auto& five = by_n[5];
  const auto& six = by_n[6];
  o.pass = five.size() == kMinimalOn5 && is_isomorphic(five[0], k5_minus_e());
  std::set<std::string> keys6;
  for (const auto& g : six) keys6.insert(canonical_key(g));
  bool has_c1 = true;
  std::set<std::string> c1;
  for (const auto& site : legal_sites(k5_minus_e(), ConstructionKind::C1)) {
    auto k = canonical_key(apply_construction(k5_minus_e(), site).after);
    c1.insert(k);
    has_c1 &= keys6.count(k) > 0;
  }
  o.pass &= keys6.count(canonical_key(k4_vee_k4())) == 1 && has_c1;
  o.pass &= six.size() == kMinimalOn6 && by_n[7].size() == kMinimalOn7 && by_n[8].size() == kMinimalOn8;
  o.detail = "counts n=5..8: " + std::to_string(five.size()) + ", " + std::to_string(six.size()) + ", " +
             std::to_string(by_n[7].size()) + ", " + std::to_string(by_n[8].size()) +
             "; n=6 holds K4vK4 and all " + std::to_string(c1.size()) + " C1 extensions of K5-e";
  return o;
}

Outcome construction_closure(Context& ctx) {
  ensure_enumerated(ctx);
  Outcome o;
  std::vector<Graph> corpus = ctx.enumerated;
  for (const auto& g : grown_chains(200, 10, 41)) corpus.push_back(g);
  for (auto kind : {FamilyKind::Chi4DiamondChain, FamilyKind::MaxDegreeFamily})
    for (const auto& m : generate_family({kind, 4}))
      if (m.graph.vertex_count() <= 10) corpus.push_back(m.graph);
  corpus = dedupe(corpus);

  int failures = 0;
  std::string first;
  std::size_t applications = 0;
  std::vector<std::vector<Graph>> outputs(corpus.size());
#pragma omp parallel for schedule(dynamic) num_threads(ctx.jobs) reduction(+ : failures, applications)
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    int local = 0;
    std::string msg;
    outputs[i] = all_kinds_outputs(corpus[i], local, msg);
    applications += outputs[i].size() + static_cast<std::size_t>(local);
    failures += local;
    if (local > 0) {
#pragma omp critical
      if (first.empty()) first = msg;
    }
  }
  for (auto& out : outputs)
    for (auto& g : out) ctx.closure_outputs.push_back(std::move(g));
  o.pass = failures == 0;
  o.detail = std::to_string(corpus.size()) + " corpus graphs (<= 10 vertices), " + std::to_string(applications) +
             " applications, " + std::to_string(failures) + " failures";
  if (!first.empty()) o.detail += "; first: " + first;
  return o;
}

Outcome reduction(Context& ctx) {
  ensure_enumerated(ctx);
  Outcome o;
  std::vector<Graph> corpus = ctx.enumerated;
  for (const auto& g : ctx.closure_outputs) corpus.push_back(g);
  for (const auto& g : grown_chains(60, 14, 43)) corpus.push_back(g);
  corpus = dedupe(corpus);
  int failures = 0;
  std::string first;
  std::map<std::string, int> bases;
#pragma omp parallel for schedule(dynamic) num_threads(ctx.jobs) reduction(+ : failures)
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& g = corpus[i];
    std::string msg;
    try {
      const auto trace = reduce_to_base(g);
      const auto model = find_base_minor(g);
      if (trace.contractions() > g.vertex_count() - 5) msg = "too many contractions";
      else if (!validate_minor_model(g, model)) msg = "minor model invalid";
#pragma omp critical
      ++bases[tag_name(trace.base)];
    } catch (const std::exception& e) {
      msg = e.what();
    }
    if (!msg.empty()) {
      ++failures;
#pragma omp critical
      if (first.empty()) first = to_graph6(g) + ": " + msg;
    }
  }
  o.pass = failures == 0;
  o.detail = std::to_string(corpus.size()) + " graphs; bases";
  for (const auto& [b, c] : bases) o.detail += " " + b + "=" + std::to_string(c);
  int max_n = 0;
  for (const auto& g : corpus) max_n = std::max(max_n, g.vertex_count());
  o.detail += "; largest " + std::to_string(max_n) + " vertices; " + std::to_string(failures) + " failures";
  if (!first.empty()) o.detail += "; first: " + first;
  return o;
}

Outcome base_minors(Context& ctx) {
  Outcome o;
  int failures = 0;
  std::string first;
#pragma omp parallel for schedule(dynamic) num_threads(ctx.jobs) reduction(+ : failures)
  for (int s = 0; s < 500; ++s) {
    const int n = 5 + s % 8;
    const int extra = (n * (n - 1) / 2) - (2 * n - 1);
    const int e = 2 * n - 1 + (s / 8) % (extra + 1);
    const Graph g = random_graph(n, e, static_cast<std::uint64_t>(s));
    std::string msg;
    try {
      if (!validate_minor_model(g, find_base_minor(g))) msg = "invalid model";
    } catch (const std::exception& ex) {
      msg = ex.what();
    }
    if (!msg.empty()) {
      ++failures;
#pragma omp critical
      if (first.empty()) first = to_graph6(g) + ": " + msg;
    }
  }
  o.pass = failures == 0;
  o.detail = "500 seeded graphs with 5 <= v <= 12, e >= 2v-1; " + std::to_string(failures) + " failures";
  if (!first.empty()) o.detail += "; first: " + first;
  return o;
}

Outcome desk_scale_scan(Context& ctx) {
  Outcome o;
  const int n = 7;
  const auto pairs = kernels::pair_table(n);
  auto found = kernels::collect_masks_parallel(
      static_cast<int>(pairs.size()), -1,
      [&](std::uint64_t m) {
        if (std::popcount(m) > 13) return false;
        const auto s = kernels::small_from_mask(n, m, pairs);
        return kernels::small_is_2_connected(s) && kernels::small_every_edge_in_two_triangles(s);
      },
      ctx.jobs);
  o.pass = found.empty();
  o.detail = "2^21 labeled 7-vertex graphs, " + std::to_string(found.size()) +
             " are 2-connected with e <= 13 and every edge in two triangles";
  return o;
}

Outcome forest_embeddings(Context& ctx) {
  Outcome o;
  const auto forests = all_forests(8);
  int embeddings = 0, failures = 0;
  std::uint64_t colourings = 0;
  std::string first;
  for (const auto& f : forests)
    for (int n = std::max(5, f.vertex_count); n <= 10; ++n) {
      const auto rep = verify_embedding(embed(f, n), n, ctx.jobs);
      ++embeddings;
      colourings += rep.colourings_checked;
      if (!rep.all_pass()) {
        if (failures++ == 0) first = std::to_string(f.cycles.size()) + " cycles, n=" + std::to_string(n);
      }
    }
  o.pass = failures == 0;
  o.detail = std::to_string(forests.size()) + " forests, " + std::to_string(embeddings) + " embeddings, " +
             std::to_string(colourings) + " cycle colourings extended; " + std::to_string(failures) + " failures";
  if (!first.empty()) o.detail += "; first: " + first;
  return o;
}

Outcome chromatic_families(Context&) {
  Outcome o;
  std::ostringstream d;
  for (auto [kind, chi] : std::vector<std::pair<FamilyKind, int>>{
           {FamilyKind::Chi4DiamondChain, 4}, {FamilyKind::Chi3EdgeReplacement, 3}, {FamilyKind::Chi2BipartiteDouble, 2}}) {
    const auto members = generate_family({kind, 4});
    d << family_name(kind) << " n=";
    for (const auto& m : members) {
      const bool ok = is_minimal_ramsey(m.graph, 2).minimal && chromatic_number(m.graph, 64) == chi &&
                      (chi != 2 || structural_report(m.graph).is_bipartite);
      o.pass &= ok && members.size() == 4;
      d << m.graph.vertex_count() << (&m == &members.back() ? "" : ",");
    }
    d << " chi=" << chi << "; ";
  }
  std::vector<std::vector<int>> star;
  for (int t = 0; t < 4; ++t) star.push_back({0, 2 * t + 1, 2 * t + 2});
  const auto emb = embed(parse_forest(star), 9);
  const int delta = structural_report(emb.host).max_degree;
  o.pass &= delta >= 8 && verify_embedding(emb, 9).all_pass();
  d << "star of 4 triangles: max degree " << delta;
  o.detail = d.str();
  return o;
}

Outcome nash_williams(Context& ctx) {
  Outcome o;
  int failures = 0, dense_checks = 0;
#pragma omp parallel for schedule(dynamic) num_threads(ctx.jobs) reduction(+ : failures, dense_checks)
  for (int s = 0; s < 500; ++s) {
    const int n = 2 + s % 11;
    const int e = static_cast<int>((static_cast<std::uint64_t>(s) * 2654435761u) % (n * (n - 1) / 2 + 1));
    const Graph g = random_graph(n, e, 1000 + static_cast<std::uint64_t>(s));
    const auto ar = fractional_arboricity(g).value;
    const int k = static_cast<int>((ar.num + ar.den - 1) / ar.den);
    bool ok = true;
    auto res = decompose_into_forests(g, std::max(1, k));
    if (auto* fs = std::get_if<ForestDecomposition>(&res)) ok = is_valid_decomposition(g, *fs);
    else ok = false;
    if (k >= 2) {
      ++dense_checks;
      auto low = decompose_into_forests(g, k - 1);
      if (auto* w = std::get_if<DenseWitness>(&low))
        ok &= induced_edge_count(g, w->vertices) > (k - 1) * (static_cast<int>(w->vertices.size()) - 1);
      else
        ok = false;
    }
    failures += ok ? 0 : 1;
  }
  o.pass = failures == 0;
  o.detail = "500 seeded graphs on 2..12 vertices, " + std::to_string(dense_checks) +
             " dense witnesses below the arboricity; " + std::to_string(failures) + " failures";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  Context ctx;
#ifdef _OPENMP
  ctx.jobs = omp_get_max_threads();
#endif
  std::vector<int> only;
  app.add_option("--jobs", ctx.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--only", only, "run only these criteria (1..10)");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome(Context&)>>> criteria{
      {"base graphs are minimal Ramsey", base_membership},
      {"pebble game agrees with the exhaustive oracle", oracle_equivalence},
      {"enumeration ground truth", enumeration_ground_truth},
      {"constructions preserve minimality", construction_closure},
      {"reduction to K5-e or K4vK4 with valid minor models", reduction},
      {"dense graphs have a base minor", base_minors},
      {"no small 2-connected graph with all edges in two triangles", desk_scale_scan},
      {"forest-of-cycles embeddings", forest_embeddings},
      {"chromatic families and large maximum degree", chromatic_families},
      {"forest decompositions match arboricity", nash_williams},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    if (id == 5 && ctx.closure_outputs.empty()) construction_closure(ctx);
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second(ctx);
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d  %s: %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(),
                out.detail.c_str(), secs);
    std::fflush(stdout);
    all &= out.pass;
  }
  return all ? 0 : 2;
}
