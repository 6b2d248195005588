#pragma once

#include <optional>

#include "nsd/coloring.hpp"
#include "nsd/graph.hpp"

namespace nsd {

inline constexpr long long kDefaultOracleNodeCap = 1'000'000'000;

enum class ExactStatus {
  Feasible,    // value holds the minimum k
  Infeasible,  // no k <= kmax works
  Unknown,     // node cap reached before a decision
};

/// Exact minimum palette size with a witness, by plain backtracking.
template <typename Coloring>
struct ExactResult {
  ExactStatus status = ExactStatus::Unknown;
  std::optional<int> value;
  Coloring witness;
  long long nodes = 0;
};

/// gndi: tries k = 1..kmax. Edges are coloured in breadth-first discovery
/// order from vertex 0; a branch dies once two adjacent vertices with all
/// edges coloured share a sum. Throws Error(EdgelessGraph).
ExactResult<EdgeColoring> exact_gndi(const Graph& g, int kmax, long long node_cap = kDefaultOracleNodeCap);

/// tgndi: tries k = 1..kmax, vertex colours first, then edges in the same
/// order as exact_gndi.
ExactResult<TotalColoring> exact_tgndi(const Graph& g, int kmax, long long node_cap = kDefaultOracleNodeCap);

/// Feasibility at one fixed k. nullopt means the node cap was reached.
std::optional<bool> nsd_edge_feasible(const Graph& g, int k, long long node_cap = kDefaultOracleNodeCap);
std::optional<bool> nsd_total_feasible(const Graph& g, int k, long long node_cap = kDefaultOracleNodeCap);

}  // namespace nsd
