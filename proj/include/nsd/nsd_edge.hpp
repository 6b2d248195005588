#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "nsd/bipartition.hpp"
#include "nsd/coloring.hpp"
#include "nsd/graph.hpp"

namespace nsd {

/// sigma(v): sum of the colours on edges at v. Throws Error(MissingColor).
VertexSums sigma(const Graph& g, const EdgeColoring& c);

/// Lists every edge whose endpoints have equal sigma. Throws Error(MissingColor).
VerificationReport verify_nsd(const Graph& g, const EdgeColoring& c);

struct EdgeSolveOptions {
  long long repair_budget_per_component = 10'000;
  long long case1_node_cap = 1'000'000;
  long long fallback_node_cap = 500'000'000;  // <= 0: uncapped
};

/// Neighbour-sum-distinguishing edge colouring of a connected cubic graph
/// with colours in {1,2,3,4}.
///
/// Dispatches on the decomposition profile (a1, b1, a2, b2):
///   case1  a1 = a2 = 0        bounded exact search over {1,2,3}
///   case2  a1 = b2 = 0        E_H -> 1, E_Y -> 2, one cross edge per Y pair -> 3
///          (b1 = a2 = 0 is handled by exchanging X and Y first)
///   case3  b1 = b2 = 0        E_H, E_X -> 1, E_Y -> 2, one e_z per pair -> 3
///   case4  anything else      E_H -> 1, E_X -> 2, E_Y -> 3, pair picks -> 3,
///                             then the v3(x) rewrite rules
/// Leftover conflicts go to best-first repair, then to exhaustive search with
/// 3 and then 4 colours.
///
/// Throws Error(NotCubic), Error(NotConnected), Error(Infeasible4) if even
/// four colours fail, Error(BudgetExceeded) if the fallback cap is hit.
SolveOutcome<EdgeColoring> constructive_edge_coloring(const Graph& g, const Decomposition& d,
                                                      const EdgeSolveOptions& options = {});

/// Bipartition (seeded), decomposition and construction in one call.
SolveOutcome<EdgeColoring> solve_edge_coloring(const Graph& g, std::uint64_t seed,
                                               const EdgeSolveOptions& options = {});

struct RepairAttempt {
  std::optional<EdgeColoring> coloring;  // empty when the budget ran out
  long long steps = 0;

  bool exhausted() const { return !coloring.has_value(); }
};

/// Local recolouring search seeded with `c`, using only `palette` colours.
/// A conflict-free input is returned unchanged after zero steps.
RepairAttempt repair_coloring(const Graph& g, const EdgeColoring& c, const VerificationReport& report,
                              std::span<const int> palette, long long budget);

}  // namespace nsd
