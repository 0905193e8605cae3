#pragma once

// Embedding a forest of cycles F into a minimal Ramsey graph G (two
// colours) so that every colouring of F that is monochromatic on each cycle
// extends to G without creating monochromatic cycles outside F.
//
// The host is grown from a 5- or 6-vertex seed by C1/C2 applications; each
// step carries a local colour rule, and extend_coloring replays them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mrc/graph.hpp"

namespace mrc {

struct ForestOfCycles {
  /// Cycles as vertex sequences over 0..vertex_count-1.
  std::vector<std::vector<int>> cycles;
  int vertex_count = 0;
  /// Original label of each vertex (sorted); identity when built directly.
  std::vector<int> labels;
};

/// Validates and relabels. Labels may be any integers; they are mapped to
/// 0..k-1 in sorted order. Throws PreconditionError naming the violation.
ForestOfCycles parse_forest(const std::vector<std::vector<int>>& cycles);

/// Same checks on an already-indexed forest.
void validate_forest(const ForestOfCycles& f);

Graph forest_graph(const ForestOfCycles& f);

/// One forest per isomorphism type with 1..max_vertices vertices and at
/// least one cycle, ordered by the canonical graph6 of its union.
std::vector<ForestOfCycles> all_forests(int max_vertices);

/// One colour (0 or 1) per cycle.
struct CycleColoring {
  std::vector<std::uint8_t> colour;
};

enum class BuildKind { BaseCase, CreateSpace, EnlargeCycle, GrowTree, ExtendBranch, NewBranch };

std::string build_kind_name(BuildKind kind);

/// Vertex roles per kind (new vertices are always fresh host ids):
///   BaseCase      case_id 1..4 on K5-e (4 = bowtie; its rule switches to
///                 case 5 when the two triangles get different colours),
///                 6 = two disjoint triangles on K4vK4; `cycles` lists the
///                 seeded cycles.
///   CreateSpace   C1(u,v,w) adding x. On a cycle: xu gets the cycle's
///                 colour, xv and xw the other. Otherwise (simulate): xv, xw
///                 copy the old colour of vw, xu gets the other.
///   EnlargeCycle  C1(u,v,w) adding x into the cycle between v and w: xv, xw
///                 get the cycle's colour, xu the other.
///   GrowTree /    C2 on the non-forest edge vw adding x, y; the new triangle
///   ExtendBranch  v-x-y gets colour t. If t equals the old colour of vw then
///                 wx = t, wy = other; else wx = wy = old colour. GrowTree
///                 starts a new component at a free vertex v.
///   NewBranch     C1(u,v,w) adding x, then C1(u,x,v) adding y; triangle
///                 u-x-y gets t, xw and yv the other colour.
struct BuildStep {
  BuildKind kind = BuildKind::BaseCase;
  int case_id = 0;
  int u = -1, v = -1, w = -1, x = -1, y = -1;
  int cycle = -1;
  bool simulate = false;
  std::vector<int> cycles;
};

struct Embedding {
  Graph host;
  ForestOfCycles forest;
  /// Forest vertex -> host vertex.
  std::vector<int> vertex_map;
  std::vector<BuildStep> build_script;
};

/// Needs n >= 5 and n >= forest.vertex_count.
Embedding embed(const ForestOfCycles& f, int n);

EdgeColoring extend_coloring(const Embedding& emb, const CycleColoring& cc);

/// Per-step check used by tests: after every step, each colour class has
/// exactly as many independent cycles as there are seeded forest cycles of
/// that colour. Returns the index of the first failing step, if any.
std::optional<std::size_t> first_unsound_step(const Embedding& emb, const CycleColoring& cc);

struct EmbeddingReport {
  bool vertex_count_ok = false;
  bool subgraph_ok = false;
  bool minimal_ok = false;
  bool colourings_ok = false;
  bool spanning_bound_ok = true;
  std::uint64_t colourings_checked = 0;
  /// Bit i = colour of cycle i for the first failing colouring.
  std::optional<std::uint64_t> failing_colouring;

  bool all_pass() const {
    return vertex_count_ok && subgraph_ok && minimal_ok && colourings_ok && spanning_bound_ok;
  }
};

/// True when colour class c of g has no cycles besides the forest cycles
/// coloured c, judged by cyclomatic numbers.
bool only_forest_cycles(const Embedding& emb, const CycleColoring& cc, const EdgeColoring& col);

EmbeddingReport verify_embedding(const Embedding& emb, int expected_n, int jobs = 1);

struct Separation {
  int l = 0;
  int m = 0;
  Embedding embedding;
  EdgeColoring witness;
};

/// Host in M(C) on at most l vertices (so Ramsey for {C3..Cl}) with a
/// colouring whose only monochromatic cycle has length m. Needs l >= 5 and
/// 3 <= m <= l.
Separation separate_cycle_families(int l, int m);

/// Lengths of all monochromatic cycles of a colouring (small graphs only).
std::vector<int> monochromatic_cycle_lengths(const Graph& g, const EdgeColoring& c);

}  // namespace mrc
