#pragma once

#include <cstdint>
#include <vector>

#include "nsd/graph.hpp"

namespace nsd {

struct Partition {
  std::vector<int> part;  // vertex -> part index in [0, m)
  int m = 2;

  /// Number of neighbours of v in a part other than its own.
  int cross_degree(const Graph& g, int v) const;
  int cross_edges(const Graph& g) const;
};

/// Local search for a spanning m-partite subgraph H with many cross edges.
///
/// Starts from a seeded random assignment and sweeps vertices in ascending
/// id, moving a vertex to the first part (ascending index) holding strictly
/// fewer of its neighbours than its own part. Stops when a full sweep makes
/// no move. Every move raises the cross-edge count, so at most |E| moves are
/// made. At the fixed point every v has d_H(v) >= (1 - 1/m) d_G(v).
///
/// Throws Error(BadM) unless 2 <= m <= g.order().
Partition max_mpartite_subgraph(const Graph& g, int m, std::uint64_t seed);

enum class Side : std::uint8_t { X, Y };

/// Split of a cubic graph along a locally optimal bipartition (V_X, V_Y).
///
/// E_H are the cross edges, E_X and E_Y the leftover edges inside each side.
/// Local optimality forces d_H(v) in {2, 3}, so E_X and E_Y are matchings;
/// a vertex with d_H(v) = 2 has a partner across its leftover edge.
struct Decomposition {
  std::vector<int> vx, vy;        // ascending vertex ids
  std::vector<int> e_h, e_x, e_y; // ascending edge ids
  int a1 = 0, b1 = 0;             // |{v in V_X : d_H(v) = 2}|, |{... = 3}|
  int a2 = 0, b2 = 0;             // same for V_Y

  std::vector<Side> side;          // per vertex
  std::vector<int> h_degree;       // per vertex
  std::vector<int> partner;        // leftover-edge neighbour, or -1
  std::vector<int> leftover_edge;  // leftover edge id, or -1
  std::vector<char> is_cross;      // per edge id

  /// Same split with the roles of X and Y exchanged.
  Decomposition swapped() const;
};

/// Throws Error(NotCubic) for non-cubic input, Error(BadM) for m != 2 and
/// Error(DegreeBoundViolated) if some vertex has d_H(v) < 2, which means `p`
/// was not a local optimum.
Decomposition decompose(const Graph& g, const Partition& p);

}  // namespace nsd
