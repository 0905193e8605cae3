#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mrc/graph.hpp"

namespace mrc {

enum class GraphFormat { EdgeList, Graph6 };

// Edge list: header "n m", then m lines "u v" (0-indexed). Blank lines and
// '#' comments are ignored.
Graph parse_graph(std::string_view text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Guesses the format: a first data line of two integers is an edge list.
GraphFormat detect_format(std::string_view text);

/// One graph per non-empty line, all graph6.
std::vector<Graph> parse_graph6_lines(std::string_view text);

/// FNV-1a over the graph6 encoding, as 16 hex digits.
std::string graph_hash(const Graph& g);

}  // namespace mrc
