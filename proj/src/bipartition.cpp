#include "nsd/bipartition.hpp"

#include <random>
#include <string>
#include <utility>

#include "nsd/error.hpp"

namespace nsd {

int Partition::cross_degree(const Graph& g, int v) const {
  int d = 0;
  for (int w : g.neighbors(v)) d += part[w] != part[v];
  return d;
}

int Partition::cross_edges(const Graph& g) const {
  int c = 0;
  for (const Edge& e : g.edges()) c += part[e.u] != part[e.v];
  return c;
}

Partition max_mpartite_subgraph(const Graph& g, int m, std::uint64_t seed) {
  const int n = g.order();
  if (m < 2 || m > n) {
    throw Error(ErrorCode::BadM, "need 2 <= m <= n, got m = " + std::to_string(m) + ", n = " + std::to_string(n));
  }
  Partition p;
  p.m = m;
  p.part.resize(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, m - 1);
  for (int& x : p.part) x = pick(rng);

  std::vector<int> count(m);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int v = 0; v < n; ++v) {
      std::fill(count.begin(), count.end(), 0);
      for (int w : g.neighbors(v)) ++count[p.part[w]];
      const int own = p.part[v];
      for (int j = 0; j < m; ++j) {
        if (count[j] < count[own]) {
          p.part[v] = j;
          moved = true;
          break;
        }
      }
    }
  }
  return p;
}

Decomposition Decomposition::swapped() const {
  Decomposition d = *this;
  std::swap(d.vx, d.vy);
  std::swap(d.e_x, d.e_y);
  std::swap(d.a1, d.a2);
  std::swap(d.b1, d.b2);
  for (Side& s : d.side) s = s == Side::X ? Side::Y : Side::X;
  return d;
}

Decomposition decompose(const Graph& g, const Partition& p) {
  if (!is_cubic(g)) throw Error(ErrorCode::NotCubic, "decomposition needs a 3-regular graph");
  if (p.m != 2) throw Error(ErrorCode::BadM, "decomposition needs a bipartition, got m = " + std::to_string(p.m));
  const int n = g.order();

  Decomposition d;
  d.side.resize(n);
  d.h_degree.assign(n, 0);
  d.partner.assign(n, -1);
  d.leftover_edge.assign(n, -1);
  d.is_cross.assign(g.size(), 0);

  for (int v = 0; v < n; ++v) {
    d.side[v] = p.part[v] == 0 ? Side::X : Side::Y;
    (d.side[v] == Side::X ? d.vx : d.vy).push_back(v);
  }
  for (int id = 0; id < g.size(); ++id) {
    const Edge& e = g.edge(id);
    if (d.side[e.u] != d.side[e.v]) {
      d.is_cross[id] = 1;
      d.e_h.push_back(id);
      ++d.h_degree[e.u];
      ++d.h_degree[e.v];
    } else {
      (d.side[e.u] == Side::X ? d.e_x : d.e_y).push_back(id);
      d.partner[e.u] = e.v;
      d.partner[e.v] = e.u;
      d.leftover_edge[e.u] = id;
      d.leftover_edge[e.v] = id;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (d.h_degree[v] < 2) {
      throw Error(ErrorCode::DegreeBoundViolated,
                  "vertex " + std::to_string(v) + " has only " + std::to_string(d.h_degree[v]) + " cross edges");
    }
    const bool two = d.h_degree[v] == 2;
    if (d.side[v] == Side::X) {
      (two ? d.a1 : d.b1) += 1;
    } else {
      (two ? d.a2 : d.b2) += 1;
    }
  }
  return d;
}

}  // namespace nsd
