#pragma once

// Reference helpers for the tests, independent of the library code.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nsd/graph.hpp"

namespace testsupport {

inline nsd::Graph random_gnp(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<nsd::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back({i, j});
  return nsd::Graph(n, edges);
}

// graph6 straight from the format description: bit k of the upper triangle
// in column order is the pair (i, j), i < j, enumerated j-major.
inline std::string reference_graph6(int n, const std::vector<std::pair<int, int>>& edge_list) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [a, b] : edge_list) adj[a][b] = adj[b][a] = true;
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(adj[i][j] ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  std::string out(1, static_cast<char>(n + 63));
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int value = 0;
    for (int b = 0; b < 6; ++b) value = value * 2 + bits[k + b];
    out.push_back(static_cast<char>(value + 63));
  }
  return out;
}

inline std::vector<std::pair<int, int>> pairs_of(const nsd::Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

// Sums from raw adjacency, vertex colours optional.
inline std::vector<int> raw_sums(const nsd::Graph& g, const std::vector<int>& edge_colors,
                                 const std::vector<int>& vertex_colors = {}) {
  std::vector<int> sum(g.order(), 0);
  for (std::size_t id = 0; id < g.edges().size(); ++id) {
    sum[g.edges()[id].u] += edge_colors[id];
    sum[g.edges()[id].v] += edge_colors[id];
  }
  for (std::size_t v = 0; v < vertex_colors.size(); ++v) sum[v] += vertex_colors[v];
  return sum;
}

inline bool raw_distinguishing(const nsd::Graph& g, const std::vector<int>& sums) {
  for (const auto& e : g.edges())
    if (sums[e.u] == sums[e.v]) return false;
  return true;
}

// Does any assignment of {1..k} to `slots` elements distinguish? Odometer
// enumeration, no pruning. Only for tiny graphs.
inline bool brute_force_feasible(const nsd::Graph& g, int k, bool total) {
  const int m = g.size();
  const int slots = m + (total ? g.order() : 0);
  std::vector<int> value(slots, 1);
  while (true) {
    std::vector<int> edge_colors(value.begin(), value.begin() + m);
    std::vector<int> vertex_colors;
    if (total) vertex_colors.assign(value.begin() + m, value.end());
    if (raw_distinguishing(g, raw_sums(g, edge_colors, vertex_colors))) return true;
    int pos = 0;
    while (pos < slots && value[pos] == k) value[pos++] = 1;
    if (pos == slots) return false;
    ++value[pos];
  }
}

inline int brute_force_min(const nsd::Graph& g, int kmax, bool total) {
  for (int k = 1; k <= kmax; ++k)
    if (brute_force_feasible(g, k, total)) return k;
  return -1;
}

}  // namespace testsupport
