#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace nsd {

/// Unordered vertex pair stored as (min, max).
struct Edge {
  int u = 0;
  int v = 0;

  static Edge make(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  int other(int w) const { return w == u ? v : u; }
  bool touches(int w) const { return w == u || w == v; }

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable once built. Edges are kept sorted, so an edge id (its index in
/// edges()) is a stable handle that colorings use as their key.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : Graph(n, {}) {}

  /// Throws Error(InvalidGraph) on loops, duplicates or out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[id]; }

  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  std::span<const int> incident_edges(int v) const { return incident_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  bool adjacent(int a, int b) const;
  std::optional<int> edge_id(int a, int b) const;

  /// Graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const int> perm) const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> incident_;
};

bool is_cubic(const Graph& g);

/// n = 0 counts as connected.
bool is_connected(const Graph& g);

/// Vertex order of a breadth-first sweep from vertex 0, restarting at the
/// smallest unvisited vertex for each further component.
std::vector<int> bfs_order(const Graph& g);

// Small named graphs used across tests, examples and the CLI.
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// Triangles 0-1-2 and 3-4-5 joined by rungs i -- i+3.
Graph prism_graph();
Graph petersen_graph();
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace nsd

template <>
struct std::hash<nsd::Edge> {
  std::size_t operator()(const nsd::Edge& e) const noexcept {
    return std::hash<long long>{}((static_cast<long long>(e.u) << 32) ^ static_cast<unsigned>(e.v));
  }
};
