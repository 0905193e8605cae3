#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mrc/graph.hpp"

namespace mrc {

struct MonochromaticCycle {
  int colour = 0;
  std::vector<int> vertices;  // simple cycle, length >= 3, closing edge implied
};

/// Colour classes are scanned in order; within a class edges are inserted
/// in edge-index order and the first edge closing a cycle determines it.
std::optional<MonochromaticCycle> find_monochromatic_cycle(const Graph& g, const EdgeColoring& c);

struct OracleOptions {
  /// For r = 2: at most this many edges. For r = 3 the scanned space
  /// 3^(e-1) may not exceed 2^(budget_edges-1).
  int budget_edges = 24;
  int jobs = 1;
};

struct ColoringSearchResult {
  bool is_ramsey = false;
  std::optional<EdgeColoring> good_coloring;
  std::uint64_t colorings_examined = 0;
};

/// Exhaustive scan of r-colourings (r in {2,3}) with edge 0 pinned to
/// colour 0. The good colouring returned is the first in scan order,
/// regardless of `jobs`.
ColoringSearchResult is_ramsey_bruteforce(const Graph& g, int r, const OracleOptions& options = {});

/// Exact chromatic number by DSATUR branch and bound; n <= budget_vertices.
int chromatic_number(const Graph& g, int budget_vertices = 16);

/// Every r-colouring has a monochromatic odd cycle iff chi(g) >= 2^r + 1.
bool is_ramsey_odd_cyclicity(const Graph& g, int r, int budget_vertices = 16);

}  // namespace mrc
