#include "nsd/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "nsd/error.hpp"

namespace nsd {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidChar: return "InvalidChar";
    case ErrorCode::TruncatedBits: return "TruncatedBits";
    case ErrorCode::TrailingGarbage: return "TrailingGarbage";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::OddN: return "OddN";
    case ErrorCode::GenerationExhausted: return "GenerationExhausted";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::BadM: return "BadM";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::DegreeBoundViolated: return "DegreeBoundViolated";
    case ErrorCode::MissingColor: return "MissingColor";
    case ErrorCode::Infeasible4: return "Infeasible4";
    case ErrorCode::Infeasible2: return "Infeasible2";
    case ErrorCode::EdgelessGraph: return "EdgelessGraph";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw Error(ErrorCode::InvalidGraph, "negative vertex count");
  for (auto& e : edges_) {
    if (e.u == e.v) throw Error(ErrorCode::InvalidGraph, "self-loop at " + std::to_string(e.u));
    e = Edge::make(e.u, e.v);
    if (e.u < 0 || e.v >= n) {
      throw Error(ErrorCode::InvalidGraph,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw Error(ErrorCode::InvalidGraph, "duplicate edge");
  }
  adjacency_.assign(n, {});
  incident_.assign(n, {});
  for (int id = 0; id < size(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
    incident_[e.u].push_back(id);
    incident_[e.v].push_back(id);
  }
}

bool Graph::adjacent(int a, int b) const { return edge_id(a, b).has_value(); }

std::optional<int> Graph::edge_id(int a, int b) const {
  if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) return std::nullopt;
  const Edge key = Edge::make(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

Graph Graph::relabeled(std::span<const int> perm) const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back(Edge::make(perm[e.u], perm[e.v]));
  return Graph(n_, std::move(out));
}

bool is_cubic(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 3) return false;
  }
  return true;
}

std::vector<int> bfs_order(const Graph& g) {
  std::vector<int> order;
  order.reserve(g.order());
  std::vector<char> seen(g.order(), 0);
  for (int root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::queue<int> queue;
    queue.push(root);
    seen[root] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      order.push_back(v);
      for (int w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push(w);
        }
      }
    }
  }
  return order;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.order();
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.push_back({a, b});
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  return Graph(a + b, std::move(edges));
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(Edge::make(i, (i + 1) % n));
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph prism_graph() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(Edge::make(i, (i + 1) % 5));
    edges.push_back({i, i + 5});
    edges.push_back(Edge::make(5 + i, 5 + (i + 2) % 5));
  }
  return Graph(10, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order()});
  return Graph(a.order() + b.order(), std::move(edges));
}

}  // namespace nsd
