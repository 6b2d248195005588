#pragma once

#include <span>
#include <vector>

#include "nsd/graph.hpp"

namespace nsd {

// Search engines over "sum labelings": colours on every edge and, in total
// mode, on every vertex. Element ids [0, |E|) are edges, [|E|, |E| + n) are
// vertices. A vertex's sum is its own colour (total mode) plus the colours of
// its incident edges; a conflict is an edge whose endpoints have equal sums.

struct LabelingSpace {
  const Graph* graph = nullptr;
  bool with_vertices = false;

  int elements() const { return graph->size() + (with_vertices ? graph->order() : 0); }
  bool is_vertex(int element) const { return element >= graph->size(); }
  int vertex_of(int element) const { return element - graph->size(); }
  int vertex_element(int v) const { return graph->size() + v; }

  std::vector<int> sums(std::span<const int> labels) const;
  int conflict_count(std::span<const int> labels) const;
};

struct RepairResult {
  bool solved = false;
  std::vector<int> labels;  // valid only when solved
  long long expanded = 0;
};

/// Best-first search from `start`, ordered by conflict count then by
/// insertion. A child differs from its parent in one element lying within
/// distance 2 of some conflict edge; it takes a colour from the matching
/// palette. Gives up after `budget` expansions or when the reachable space is
/// exhausted.
RepairResult best_first_repair(const LabelingSpace& space, std::vector<int> start,
                               std::span<const int> edge_palette, std::span<const int> vertex_palette,
                               long long budget);

enum class SearchStatus { Found, Infeasible, BudgetExceeded };

struct ExactSearchResult {
  SearchStatus status = SearchStatus::Infeasible;
  std::vector<int> labels;
  long long nodes = 0;
};

/// Depth-first exhaustive search with colours 1..k on every element. Vertex
/// elements are placed first, then edges, both in BFS order; a branch is cut
/// as soon as two adjacent fully-labelled vertices have equal sums.
/// node_cap <= 0 means no cap.
ExactSearchResult exhaustive_labeling(const LabelingSpace& space, int k, long long node_cap);

}  // namespace nsd
