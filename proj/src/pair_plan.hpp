#pragma once

#include <vector>

#include "nsd/bipartition.hpp"
#include "nsd/graph.hpp"

namespace nsd::detail {

// Leftover edges (E_X, E_Y) join two vertices whose cross degrees are both
// 2, so any colouring that is uniform on E_H gives them equal sums. A pair is
// separated by "picking" one cross edge e_z at one of its endpoints. Picked
// edges are later recoloured by the caller.
//
// After a pick, every other cross edge at the four touched vertices (the
// pair, the far endpoint of e_z and that endpoint's own partner) becomes
// dominated: it may never be picked, so those four sums stay fixed. A far
// endpoint with cross degree 3 has no partner and its edges stay free.

enum class FarEnd { Any, CrossDegree2, CrossDegree3 };

struct PairOp {
  int e_z = -1;
  int near = -1;          // endpoint of e_z inside the pair
  int near_partner = -1;
  int far = -1;           // other endpoint of e_z
  int far_partner = -1;   // -1 when far has cross degree 3
  bool fresh = false;     // no sibling edge was dominated beforehand
};

class PairPlanner {
 public:
  PairPlanner(const Graph& g, const Decomposition& d);

  /// One greedy sweep over the still-unseparated pairs of `side`, in
  /// ascending leftover-edge id. Candidate e_z are the cross edges at the
  /// lower then the higher endpoint, ascending id, whose far end matches
  /// `far`. Returns the number of picks made.
  int sweep(Side side, FarEnd far);

  bool separated(int leftover_edge) const;
  std::vector<int> unseparated() const;

  const std::vector<PairOp>& ops() const { return ops_; }
  const std::vector<char>& picked() const { return picked_; }

 private:
  std::vector<int> siblings(int e_z, int near, int far) const;

  const Graph& g_;
  const Decomposition& d_;
  std::vector<char> picked_;
  std::vector<char> dominated_;
  std::vector<int> pick_count_;
  std::vector<PairOp> ops_;
};

}  // namespace nsd::detail
