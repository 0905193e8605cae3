#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mrc/graph.hpp"

namespace mrc {

/// Canonical relabelling by colour refinement plus individualisation
/// search; the lexicographically least relabelled edge list wins. Exact for
/// every graph, fast enough for the n <= 12 graphs it is used on.
Graph canonical_form(const Graph& g);

/// graph6 of the canonical form; equal iff isomorphic.
std::string canonical_key(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

/// Some phi with {phi(u), phi(v)} in E(b) exactly when {u, v} in E(a), found
/// by backtracking; meant for small graphs.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

}  // namespace mrc
