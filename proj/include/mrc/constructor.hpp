#pragma once

// The three growth constructions for minimal Ramsey graphs (two colours),
// the chromatic-number families built from them, and exhaustive
// enumeration at small orders.

#include <string>
#include <vector>

#include "mrc/graph.hpp"

namespace mrc {

enum class ConstructionKind { C1, C2, C3 };

/// C1(u,v,w): new x joined to u, v, w; then vw deleted. Needs the path u-v-w.
/// C2(v,w): edge vw replaced by a diamond whose non-adjacent pair is v, w.
/// C3(u,v,w): new x, y each joined to u, v, w; then uv and vw deleted.
struct ConstructionSite {
  ConstructionKind kind = ConstructionKind::C1;
  int u = -1;
  int v = -1;
  int w = -1;
};

struct ConstructionApplication {
  ConstructionSite site;
  Graph before;
  Graph after;
  std::vector<int> new_vertices;
  /// For C1/C3: whether the path ends u, w were adjacent.
  bool uw_adjacent = false;
};

std::string kind_name(ConstructionKind kind);

/// Applies the construction. With check_input the input must be minimal
/// Ramsey; the output is always checked and a failure throws
/// TheoremViolation.
ConstructionApplication apply_construction(const Graph& g, const ConstructionSite& site,
                                           bool check_input = true);

/// Every site of the given kind, in lexicographic (u, v, w) order. C1 sites
/// are ordered paths; C3 sites have u < w; C2 sites are the edges (as v < w).
std::vector<ConstructionSite> legal_sites(const Graph& g, ConstructionKind kind);

enum class FamilyKind { Chi4DiamondChain, Chi3EdgeReplacement, Chi2BipartiteDouble, MaxDegreeFamily };

struct FamilySpec {
  FamilyKind kind = FamilyKind::Chi4DiamondChain;
  int steps = 1;
};

struct FamilyMember {
  Graph graph;
  int target_chi = 0;  // 0 when the family has no fixed chromatic number
};

std::string family_name(FamilyKind kind);
FamilyKind parse_family(const std::string& name);

/// Members 1..steps. Each is verified minimal Ramsey, and its chromatic
/// number (and bipartiteness for the chi = 2 family) is checked.
std::vector<FamilyMember> generate_family(const FamilySpec& spec);

/// Replaces every edge of g by a diamond.
Graph replace_all_edges_by_diamonds(const Graph& g);

/// Every minimal Ramsey graph (two colours) on exactly n vertices up to
/// isomorphism, as canonical forms sorted by graph6. n <= 8.
std::vector<Graph> enumerate_minimal(int n, int jobs = 1);

}  // namespace mrc
