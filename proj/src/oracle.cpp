#include "nsd/oracle.hpp"

#include <queue>

#include "nsd/error.hpp"

namespace nsd {
namespace {

std::vector<int> edge_discovery_order(const Graph& g) {
  std::vector<int> order;
  std::vector<char> seen_vertex(g.order(), 0);
  std::vector<char> seen_edge(g.size(), 0);
  for (int root = 0; root < g.order(); ++root) {
    if (seen_vertex[root]) continue;
    std::queue<int> q;
    q.push(root);
    seen_vertex[root] = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int id : g.incident_edges(v)) {
        if (!seen_edge[id]) {
          seen_edge[id] = 1;
          order.push_back(id);
        }
        const int w = g.edge(id).other(v);
        if (!seen_vertex[w]) {
          seen_vertex[w] = 1;
          q.push(w);
        }
      }
    }
  }
  return order;
}

// One feasibility run at fixed k. Vertex colours (total mode) are fixed
// before any edge, so a vertex is complete once its last edge is coloured.
class Backtrack {
 public:
  Backtrack(const Graph& g, bool total, int k, long long cap)
      : g_(g), k_(k), cap_(cap), edge_order_(edge_discovery_order(g)) {
    edge_color_.assign(g.size(), 0);
    vertex_color_.assign(g.order(), 0);
    pending_.resize(g.order());
    sum_.assign(g.order(), 0);
    for (int v = 0; v < g.order(); ++v) pending_[v] = g.degree(v);
    if (total) {
      for (int v : bfs_order(g)) vertex_order_.push_back(v);
    }
  }

  std::optional<bool> run() {
    const bool found = place_vertex(0);
    if (capped_) return std::nullopt;
    return found;
  }

  long long nodes() const { return nodes_; }
  const std::vector<int>& edge_colors() const { return edge_color_; }
  const std::vector<int>& vertex_colors() const { return vertex_color_; }

 private:
  bool tick() {
    if (cap_ > 0 && nodes_ >= cap_) {
      capped_ = true;
      return false;
    }
    ++nodes_;
    return true;
  }

  bool place_vertex(std::size_t i) {
    if (i == vertex_order_.size()) return place_edge(0);
    const int v = vertex_order_[i];
    for (int c = 1; c <= k_; ++c) {
      if (!tick()) return false;
      vertex_color_[v] = c;
      sum_[v] += c;
      if (place_vertex(i + 1)) return true;
      sum_[v] -= c;
      if (capped_) return false;
    }
    vertex_color_[v] = 0;
    return false;
  }

  bool complete_and_clashing(int v) const {
    if (pending_[v] != 0) return false;
    for (int w : g_.neighbors(v)) {
      if (pending_[w] == 0 && sum_[w] == sum_[v]) return true;
    }
    return false;
  }

  bool place_edge(std::size_t i) {
    if (i == edge_order_.size()) return true;
    const int id = edge_order_[i];
    const Edge& e = g_.edge(id);
    for (int c = 1; c <= k_; ++c) {
      if (!tick()) return false;
      edge_color_[id] = c;
      sum_[e.u] += c;
      sum_[e.v] += c;
      --pending_[e.u];
      --pending_[e.v];
      const bool dead = complete_and_clashing(e.u) || complete_and_clashing(e.v);
      if (!dead && place_edge(i + 1)) return true;
      sum_[e.u] -= c;
      sum_[e.v] -= c;
      ++pending_[e.u];
      ++pending_[e.v];
      if (capped_) return false;
    }
    edge_color_[id] = 0;
    return false;
  }

  const Graph& g_;
  int k_;
  long long cap_;
  long long nodes_ = 0;
  bool capped_ = false;
  std::vector<int> edge_order_;
  std::vector<int> vertex_order_;
  std::vector<int> edge_color_, vertex_color_;
  std::vector<int> pending_, sum_;
};

template <typename Coloring, typename MakeWitness>
ExactResult<Coloring> minimise(const Graph& g, bool total, int kmax, long long cap, MakeWitness make) {
  ExactResult<Coloring> result;
  long long budget = cap;
  for (int k = 1; k <= kmax; ++k) {
    Backtrack search(g, total, k, budget);
    const std::optional<bool> feasible = search.run();
    result.nodes += search.nodes();
    if (!feasible) {
      result.status = ExactStatus::Unknown;
      return result;
    }
    if (*feasible) {
      result.status = ExactStatus::Feasible;
      result.value = k;
      result.witness = make(search);
      return result;
    }
    if (cap > 0) budget = cap - result.nodes;
    if (cap > 0 && budget <= 0) {
      result.status = ExactStatus::Unknown;
      return result;
    }
  }
  result.status = ExactStatus::Infeasible;
  return result;
}

}  // namespace

ExactResult<EdgeColoring> exact_gndi(const Graph& g, int kmax, long long node_cap) {
  if (g.size() == 0) throw Error(ErrorCode::EdgelessGraph, "gndi is undefined without edges");
  return minimise<EdgeColoring>(g, false, kmax, node_cap,
                                [](const Backtrack& s) { return EdgeColoring{s.edge_colors()}; });
}

ExactResult<TotalColoring> exact_tgndi(const Graph& g, int kmax, long long node_cap) {
  return minimise<TotalColoring>(g, true, kmax, node_cap, [](const Backtrack& s) {
    return TotalColoring{s.edge_colors(), s.vertex_colors()};
  });
}

std::optional<bool> nsd_edge_feasible(const Graph& g, int k, long long node_cap) {
  return Backtrack(g, false, k, node_cap).run();
}

std::optional<bool> nsd_total_feasible(const Graph& g, int k, long long node_cap) {
  return Backtrack(g, true, k, node_cap).run();
}

}  // namespace nsd
