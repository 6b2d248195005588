#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "nsd/bipartition.hpp"
#include "nsd/coloring.hpp"
#include "nsd/error.hpp"
#include "nsd/graph.hpp"

namespace nsd::detail {

inline void require_solvable(const Graph& g, const Decomposition& d) {
  if (!is_cubic(g)) throw Error(ErrorCode::NotCubic, "solver needs a 3-regular graph");
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "solver needs a connected graph");
  if (static_cast<int>(d.side.size()) != g.order() || static_cast<int>(d.is_cross.size()) != g.size()) {
    throw Error(ErrorCode::InvalidGraph, "decomposition was built for a different graph");
  }
}

inline VerificationReport conflicts_of(const Graph& g, const std::vector<int>& sums) {
  VerificationReport r;
  for (const Edge& e : g.edges()) {
    if (sums[e.u] == sums[e.v]) r.conflicts.push_back(e);
  }
  r.ok = r.conflicts.empty();
  return r;
}

/// Connected components of the subgraph spanned by the conflict edges.
inline int conflict_components(const Graph& g, const VerificationReport& report) {
  std::vector<int> root(g.order());
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  int components = 0;
  std::vector<char> used(g.order(), 0);
  for (const Edge& e : report.conflicts) {
    for (int v : {e.u, e.v}) {
      if (!used[v]) {
        used[v] = 1;
        ++components;
      }
    }
    const int a = find(e.u), b = find(e.v);
    if (a != b) {
      root[a] = b;
      --components;
    }
  }
  return components;
}

}  // namespace nsd::detail
