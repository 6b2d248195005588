#pragma once

#include <cstdint>
#include <vector>

#include "nsd/graph.hpp"

namespace nsd {

inline constexpr int kConfigurationRetryBudget = 10'000;

/// Configuration model: 3 stubs per vertex, uniform perfect matching of the
/// stubs, rejected and redrawn on loops or multi-edges. Output may be
/// disconnected. Deterministic per (n, seed) for a given standard library.
/// Throws Error(OddN) for odd n, Error(Unsupported) for n < 4 and
/// Error(GenerationExhausted) after kConfigurationRetryBudget rejections.
Graph random_cubic(int n, std::uint64_t seed);

/// Which reached vertex with free stubs the enumerator extends next.
enum class StubOrder {
  LowestFirst,   // breadth-first flavour
  HighestFirst,  // depth-first flavour
};

/// One representative per isomorphism class of connected simple cubic graphs
/// on n vertices, n in {4, 6, 8, 10, 12}. Representatives are returned in
/// ascending certificate order, so the result does not depend on `order`.
/// Throws Error(Unsupported) for any other n.
std::vector<Graph> enumerate_cubic(int n, StubOrder order = StubOrder::LowestFirst);

struct EnumerationStats {
  long long labeled_graphs = 0;  // leaves of the stub-matching search
  long long dead_ends = 0;
};

std::vector<Graph> enumerate_cubic(int n, StubOrder order, EnumerationStats& stats);

}  // namespace nsd
