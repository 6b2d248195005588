#include "pair_plan.hpp"

#include <algorithm>

namespace nsd::detail {

PairPlanner::PairPlanner(const Graph& g, const Decomposition& d)
    : g_(g), d_(d), picked_(g.size(), 0), dominated_(g.size(), 0), pick_count_(g.order(), 0) {}

bool PairPlanner::separated(int leftover_edge) const {
  const Edge& e = g_.edge(leftover_edge);
  return pick_count_[e.u] != pick_count_[e.v];
}

std::vector<int> PairPlanner::unseparated() const {
  std::vector<int> out;
  for (const auto* list : {&d_.e_x, &d_.e_y}) {
    for (int id : *list) {
      if (!separated(id)) out.push_back(id);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> PairPlanner::siblings(int e_z, int near, int far) const {
  std::vector<int> touched{near, d_.partner[near]};
  if (d_.partner[far] >= 0) {
    touched.push_back(far);
    touched.push_back(d_.partner[far]);
  }
  std::vector<int> out;
  for (int v : touched) {
    for (int id : g_.incident_edges(v)) {
      if (id != e_z && d_.is_cross[id]) out.push_back(id);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int PairPlanner::sweep(Side side, FarEnd far_filter) {
  const std::vector<int>& pairs = side == Side::X ? d_.e_x : d_.e_y;
  int picks = 0;
  for (int pair_edge : pairs) {
    if (separated(pair_edge)) continue;
    const Edge& pe = g_.edge(pair_edge);

    int chosen = -1;
    int chosen_near = -1;
    bool chosen_fresh = false;
    for (int near : {pe.u, pe.v}) {
      for (int id : g_.incident_edges(near)) {
        if (!d_.is_cross[id] || picked_[id] || dominated_[id]) continue;
        const int far = g_.edge(id).other(near);
        if (far_filter == FarEnd::CrossDegree2 && d_.h_degree[far] != 2) continue;
        if (far_filter == FarEnd::CrossDegree3 && d_.h_degree[far] != 3) continue;
        // The far pair must still be unseparated, or picking would break it.
        if (d_.partner[far] >= 0 && pick_count_[far] != pick_count_[d_.partner[far]]) continue;

        const std::vector<int> sib = siblings(id, near, far);
        bool valid = true;
        bool fresh = true;
        for (int s : sib) {
          valid &= !picked_[s];
          fresh &= !dominated_[s];
        }
        if (!valid) continue;
        if (chosen < 0 || (fresh && !chosen_fresh)) {
          chosen = id;
          chosen_near = near;
          chosen_fresh = fresh;
        }
        if (chosen_fresh) break;
      }
      if (chosen_fresh) break;
    }
    if (chosen < 0) continue;

    PairOp op;
    op.e_z = chosen;
    op.near = chosen_near;
    op.near_partner = d_.partner[chosen_near];
    op.far = g_.edge(chosen).other(chosen_near);
    op.far_partner = d_.partner[op.far];
    op.fresh = chosen_fresh;
    picked_[chosen] = 1;
    ++pick_count_[op.near];
    ++pick_count_[op.far];
    for (int s : siblings(chosen, op.near, op.far)) dominated_[s] = 1;
    ops_.push_back(op);
    ++picks;
  }
  return picks;
}

}  // namespace nsd::detail
