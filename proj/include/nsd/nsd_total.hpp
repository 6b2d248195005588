#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "nsd/bipartition.hpp"
#include "nsd/coloring.hpp"
#include "nsd/graph.hpp"

namespace nsd {

/// t(v) = f(v) + sum of incident edge colours. Throws Error(MissingColor).
TotalSums t_sums(const Graph& g, const TotalColoring& c);

/// Lists every edge whose endpoints have equal t. Throws Error(MissingColor).
VerificationReport verify_total(const Graph& g, const TotalColoring& c);

struct TotalSolveOptions {
  long long repair_budget_per_component = 10'000;
  long long fallback_node_cap = 500'000'000;  // <= 0: uncapped
};

/// Neighbour-sum-distinguishing total colouring of a connected cubic graph
/// with colours in {1,2}.
///
///   case1  a1 = a2 = 0   X vertices 1, Y vertices 2, edges 1: t = 4 | 5
///   case2  a1 = b2 = 0   vertices 1, E_H 1, E_Y 2, lower end of each Y pair -> 2
///   case3  b1 = b2 = 0   X 1, Y 2, E_H and E_X 1, E_Y 2, one e_z per pair -> 2
///   case4  otherwise     X 1, Y 2, E_H 2, E_X 1, E_Y 2, pair picks -> 1, then
///                        the v3(y) / v3(x) rewrite rules
///
/// Leftover conflicts go to best-first repair and then to exhaustive search,
/// both restricted to {1,2}. Throws Error(NotCubic), Error(NotConnected),
/// Error(Infeasible2) when no {1,2} colouring exists, Error(BudgetExceeded)
/// when the fallback cap is hit.
SolveOutcome<TotalColoring> constructive_total_coloring(const Graph& g, const Decomposition& d,
                                                        const TotalSolveOptions& options = {});

SolveOutcome<TotalColoring> solve_total_coloring(const Graph& g, std::uint64_t seed,
                                                 const TotalSolveOptions& options = {});

struct TotalRepairAttempt {
  std::optional<TotalColoring> coloring;
  long long steps = 0;

  bool exhausted() const { return !coloring.has_value(); }
};

/// Same engine as repair_coloring, over vertex and edge colours together.
TotalRepairAttempt repair_total_coloring(const Graph& g, const TotalColoring& c, const VerificationReport& report,
                                         std::span<const int> palette, long long budget);

}  // namespace nsd
