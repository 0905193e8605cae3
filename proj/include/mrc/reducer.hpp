#pragma once

// Reduction of minimal Ramsey graphs (two colours) down to K5-e or K4vK4
// by contracting edges in at most one triangle and re-extracting minimal
// subgraphs, plus minor models replayed back into the input graph.

#include <vector>

#include "mrc/graph.hpp"

namespace mrc {

enum class StepKind { ContractEdge, DeleteEdge, DropIsolatedVertex };

struct ReductionStep {
  StepKind kind = StepKind::ContractEdge;
  Edge edge{};      // ContractEdge, DeleteEdge
  int vertex = -1;  // DropIsolatedVertex
  Graph graph_after;
};

struct ReductionTrace {
  Graph start;
  std::vector<ReductionStep> steps;
  GraphTag base = GraphTag::K5minusE;

  const Graph& final_graph() const { return steps.empty() ? start : steps.back().graph_after; }
  int contractions() const;
};

struct MinorModel {
  GraphTag base = GraphTag::K5minusE;
  Graph base_graph;
  /// branch_sets[i] = original vertices forming base vertex i, sorted.
  std::vector<std::vector<int>> branch_sets;
  /// One original edge per base edge, in the base graph's edge order.
  std::vector<Edge> edge_map;
};

std::string step_kind_name(StepKind kind);

std::vector<Edge> contractible_edges(const Graph& g);

/// Deletes edges in sorted order whenever the graph stays Ramsey, then drops
/// isolated vertices (highest id first so earlier ids stay put). Returns the
/// steps; empty when g is already minimal.
std::vector<ReductionStep> minimal_ramsey_steps(const Graph& g, int r);
Graph minimal_ramsey_subgraph(const Graph& g, int r);

ReductionTrace reduce_to_base(const Graph& g);

/// Branch sets after replaying `steps` from a graph on n vertices, one per
/// surviving vertex.
std::vector<std::vector<int>> replay_branch_sets(int n, const std::vector<ReductionStep>& steps);

MinorModel find_base_minor(const Graph& g);
bool validate_minor_model(const Graph& g, const MinorModel& m);

}  // namespace mrc
