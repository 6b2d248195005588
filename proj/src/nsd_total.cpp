#include "nsd/nsd_total.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "nsd/error.hpp"
#include "nsd/labeling_search.hpp"
#include "pair_plan.hpp"
#include "solve_common.hpp"

namespace nsd {
namespace {

std::vector<int> pack(const TotalColoring& c) {
  std::vector<int> labels = c.edge_colors;
  labels.insert(labels.end(), c.vertex_colors.begin(), c.vertex_colors.end());
  return labels;
}

TotalColoring unpack(const Graph& g, const std::vector<int>& labels) {
  TotalColoring c;
  c.edge_colors.assign(labels.begin(), labels.begin() + g.size());
  c.vertex_colors.assign(labels.begin() + g.size(), labels.end());
  return c;
}

}  // namespace

TotalSums t_sums(const Graph& g, const TotalColoring& c) {
  require_complete(g, c);
  return LabelingSpace{&g, true}.sums(pack(c));
}

VerificationReport verify_total(const Graph& g, const TotalColoring& c) {
  return detail::conflicts_of(g, t_sums(g, c));
}

TotalRepairAttempt repair_total_coloring(const Graph& g, const TotalColoring& c, const VerificationReport& report,
                                         std::span<const int> palette, long long budget) {
  TotalRepairAttempt attempt;
  if (report.ok) {
    attempt.coloring = c;
    return attempt;
  }
  const LabelingSpace space{&g, true};
  RepairResult r = best_first_repair(space, pack(c), palette, palette, budget);
  attempt.steps = r.expanded;
  if (r.solved) attempt.coloring = unpack(g, r.labels);
  return attempt;
}

namespace {

constexpr std::array<int, 2> kPalette{1, 2};

void internal_check(bool condition, const char* what) {
  if (!condition) throw std::logic_error(std::string("total construction invariant broken: ") + what);
}

// Working copy of a total colouring with by-name access.
struct Work {
  const Graph& g;
  std::vector<int> edge;
  std::vector<int> vertex;

  int& at(int a, int b) { return edge[*g.edge_id(a, b)]; }
  std::vector<int> sums() const {
    std::vector<int> s = vertex;
    for (int id = 0; id < g.size(); ++id) {
      s[g.edge(id).u] += edge[id];
      s[g.edge(id).v] += edge[id];
    }
    return s;
  }
  // Sets and reports whether anything changed.
  bool set_edge(int a, int b, int c) {
    int& slot = at(a, b);
    if (slot == c) return false;
    slot = c;
    return true;
  }
  bool set_vertex(int v, int c) {
    if (vertex[v] == c) return false;
    vertex[v] = c;
    return true;
  }
};

Work start(const Graph& g, const Decomposition& d, int vx, int vy, int h, int ex, int ey) {
  Work w{g, std::vector<int>(g.size()), std::vector<int>(g.order())};
  for (int v : d.vx) w.vertex[v] = vx;
  for (int v : d.vy) w.vertex[v] = vy;
  for (int id : d.e_h) w.edge[id] = h;
  for (int id : d.e_x) w.edge[id] = ex;
  for (int id : d.e_y) w.edge[id] = ey;
  return w;
}

Work build_case1(const Graph& g, const Decomposition& d) {
  Work w = start(g, d, 1, 2, 1, 1, 1);
  const std::vector<int> t = w.sums();
  for (int v : d.vx) internal_check(t[v] == 4, "case1 X sum");
  for (int v : d.vy) internal_check(t[v] == 5, "case1 Y sum");
  return w;
}

// a1 = b2 = 0 after orientation. All vertices 1, E_H 1, E_Y 2; the lower
// endpoint of each Y pair becomes 2, so t(X) = 4 and t(Y) is 5 or 6.
Work build_case2(const Graph& g, const Decomposition& d) {
  Work w = start(g, d, 1, 1, 1, 1, 2);
  for (int pair_edge : d.e_y) w.vertex[g.edge(pair_edge).u] = 2;
  const std::vector<int> t = w.sums();
  for (int v : d.vx) internal_check(t[v] == 4, "case2 X sum");
  for (int v : d.vy) internal_check(t[v] == 5 || t[v] == 6, "case2 Y sum");
  return w;
}

// X 1, Y 2, E_H and E_X 1, E_Y 2; e_z picks become 2. An operated quadruple
// ends at t = 5 (X end of e_z), 4 (its partner), 7 (Y end), 6 (its partner).
Work build_case3(const Graph& g, const Decomposition& d, SolveStats& stats) {
  Work w = start(g, d, 1, 2, 1, 1, 2);
  detail::PairPlanner planner(g, d);
  planner.sweep(Side::X, detail::FarEnd::Any);
  planner.sweep(Side::Y, detail::FarEnd::Any);
  for (const detail::PairOp& op : planner.ops()) w.edge[op.e_z] = 2;
  stats.pair_operations = static_cast<int>(planner.ops().size());
  stats.pairing_deadlock = !planner.unseparated().empty();

  const std::vector<int> t = w.sums();
  for (const detail::PairOp& op : planner.ops()) {
    const bool near_is_x = d.side[op.near] == Side::X;
    const int x = near_is_x ? op.near : op.far;
    const int x_partner = near_is_x ? op.near_partner : op.far_partner;
    const int y = near_is_x ? op.far : op.near;
    const int y_partner = near_is_x ? op.far_partner : op.near_partner;
    internal_check(t[x] == 5 && t[x_partner] == 4 && t[y] == 7 && t[y_partner] == 6, "case3 quadruple sums");
  }
  return w;
}

// The X-side neighbours of a Y vertex other than `skip`, ascending.
std::vector<int> x_neighbours(const Graph& g, const Decomposition& d, int y, int skip) {
  std::vector<int> out;
  for (int w : g.neighbors(y)) {
    if (w != skip && d.side[w] == Side::X) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Rewrites around a clashing cross-degree-3 vertex: v3(y) at t = 5 or 6,
// v3(x) at t = 7. Returns true when some colour actually changed.
bool apply_rule(const Graph& g, const Decomposition& d, Work& w, const std::vector<int>& t, int v) {
  if (d.h_degree[v] != 3) return false;
  bool clash = false;
  for (int u : g.neighbors(v)) clash |= t[u] == t[v];
  if (!clash) return false;

  if (d.side[v] == Side::Y && t[v] == 5) {
    return w.set_vertex(v, 1);
  }

  if (d.side[v] == Side::Y && t[v] == 6) {
    // Two cross edges lowered to 1 (towards x1, x2); v0 is the third neighbour.
    std::vector<int> lowered, kept;
    for (int u : g.neighbors(v)) (w.at(v, u) == 1 ? lowered : kept).push_back(u);
    if (lowered.size() != 2 || kept.size() != 1) return false;
    const int v0 = kept[0];
    if (t[v0] != 6) return false;
    bool v0_has_other_six = false;
    for (int u : g.neighbors(v0)) v0_has_other_six |= u != v && t[u] == 6;
    if (!v0_has_other_six) {
      bool changed = w.set_vertex(v, 1);
      changed |= w.set_edge(v0, v, 1);
      changed |= w.set_vertex(v0, 2);
      return changed;
    }
    if (d.h_degree[v0] == 2) return w.set_vertex(v0, 2);
    int v1 = -1;
    for (int u : g.neighbors(v0)) {
      if (u != v && d.h_degree[u] == 2) {
        v1 = u;
        break;
      }
    }
    if (v1 < 0) return false;
    bool changed = w.set_vertex(v0, 2);
    changed |= w.set_edge(v0, v1, 2);
    changed |= w.set_vertex(v1, 1);
    return changed;
  }

  if (d.side[v] == Side::X && t[v] == 7) {
    std::vector<int> ys(g.neighbors(v).begin(), g.neighbors(v).end());
    std::sort(ys.begin(), ys.end());
    std::vector<int> eights, sevens, sixes;
    for (int y : ys) {
      if (t[y] == 8) eights.push_back(y);
      if (t[y] == 7) sevens.push_back(y);
      if (t[y] == 6) sixes.push_back(y);
    }

    if (eights.empty() && !sevens.empty()) return w.set_vertex(v, 2);

    if (eights.size() == 1 && sevens.size() == 2) {
      const int ya = sevens[0], yb = sevens[1];
      if (d.h_degree[ya] == 2 && d.h_degree[yb] == 2) {
        const int xa = x_neighbours(g, d, ya, v).front();
        const int xb = x_neighbours(g, d, yb, v).front();
        if (t[xa] == 5 && t[xb] == 5) {
          bool changed = w.set_edge(ya, v, 1);
          changed |= w.set_edge(yb, v, 1);
          return changed;
        }
        for (auto [y, x] : {std::pair{ya, xa}, std::pair{yb, xb}}) {
          if (t[x] == 6) {
            bool changed = w.set_vertex(y, 1);
            changed |= w.set_edge(y, v, 1);
            return changed;
          }
        }
        return false;
      }
      for (int y : {ya, yb}) {
        if (d.h_degree[y] != 3) continue;
        const std::vector<int> xs = x_neighbours(g, d, y, v);
        for (int i = 0; i < 2; ++i) {
          if (t[xs[1 - i]] != 5) continue;
          const int x = xs[i];
          bool changed = w.set_edge(y, x, 1);
          changed |= w.set_edge(y, v, 1);
          changed |= w.set_vertex(y, 1);
          changed |= w.set_vertex(x, 2);
          return changed;
        }
      }
      return false;
    }

    if (eights.size() == 1 && sevens.size() == 1 && sixes.size() == 1) {
      const int y = sixes[0];
      bool changed = w.set_edge(y, v, 1);
      changed |= w.set_vertex(y, 1);
      return changed;
    }

    if (eights.size() == 2 && sevens.size() == 1) {
      const int y = sevens[0];
      const std::vector<int> xs = x_neighbours(g, d, y, v);
      if (d.h_degree[y] == 2) {
        if (t[xs[0]] == 5) {
          bool changed = w.set_edge(y, v, 1);
          changed |= w.set_vertex(v, 2);
          return changed;
        }
        if (t[xs[0]] == 6) {
          bool changed = w.set_edge(y, v, 1);
          changed |= w.set_vertex(y, 1);
          return changed;
        }
        return false;
      }
      const int x = xs[0];
      bool changed = w.set_edge(y, x, 1);
      changed |= w.set_edge(y, v, 1);
      changed |= w.set_vertex(y, 1);
      changed |= w.set_vertex(x, 2);
      return changed;
    }
  }
  return false;
}

// X 1, Y 2, E_H 2, E_X 1, E_Y 2. Pair picks drop from 2 to 1, preferring
// e_z towards cross-degree-2 vertices, then towards cross-degree-3 ones.
Work build_case4(const Graph& g, const Decomposition& d, SolveStats& stats) {
  Work w = start(g, d, 1, 2, 2, 1, 2);
  detail::PairPlanner planner(g, d);
  planner.sweep(Side::X, detail::FarEnd::CrossDegree2);
  planner.sweep(Side::X, detail::FarEnd::CrossDegree3);
  planner.sweep(Side::Y, detail::FarEnd::CrossDegree3);
  planner.sweep(Side::Y, detail::FarEnd::CrossDegree2);
  for (const detail::PairOp& op : planner.ops()) w.edge[op.e_z] = 1;
  stats.pair_operations = static_cast<int>(planner.ops().size());
  stats.pairing_deadlock = !planner.unseparated().empty();

  const int cap = g.order() + g.size();
  while (stats.rule_applications < cap) {
    const std::vector<int> t = w.sums();
    bool applied = false;
    for (int v = 0; v < g.order() && !applied; ++v) applied = apply_rule(g, d, w, t, v);
    if (!applied) break;
    ++stats.rule_applications;
  }
  return w;
}

SolveOutcome<TotalColoring> finish(const Graph& g, Work w, Method dispatched, SolveStats stats,
                                   const TotalSolveOptions& options) {
  const LabelingSpace space{&g, true};
  SolveOutcome<TotalColoring> out;
  out.dispatched = dispatched;
  TotalColoring c{std::move(w.edge), std::move(w.vertex)};

  VerificationReport report = verify_total(g, c);
  stats.conflicts_before_repair = static_cast<int>(report.conflicts.size());
  if (report.ok) {
    out.method = dispatched;
  } else {
    const long long budget = options.repair_budget_per_component * detail::conflict_components(g, report);
    TotalRepairAttempt attempt = repair_total_coloring(g, c, report, kPalette, budget);
    stats.repair_steps = attempt.steps;
    if (!attempt.exhausted()) {
      c = std::move(*attempt.coloring);
      out.method = Method::Repaired;
    } else {
      ExactSearchResult r = exhaustive_labeling(space, 2, options.fallback_node_cap);
      stats.fallback_nodes = r.nodes;
      if (r.status == SearchStatus::BudgetExceeded) {
        throw Error(ErrorCode::BudgetExceeded, "total fallback search hit its node cap");
      }
      if (r.status == SearchStatus::Infeasible) {
        throw Error(ErrorCode::Infeasible2, "no NSD total colouring with colours {1,2} exists");
      }
      c = unpack(g, r.labels);
      out.method = Method::Fallback;
    }
  }

  internal_check(verify_total(g, c).ok, "returned colouring must verify");
  out.colors_used = distinct_colors({&c.edge_colors, &c.vertex_colors});
  internal_check(out.colors_used.front() >= 1 && out.colors_used.back() <= 2, "palette within {1,2}");
  out.coloring = std::move(c);
  out.stats = stats;
  return out;
}

}  // namespace

SolveOutcome<TotalColoring> constructive_total_coloring(const Graph& g, const Decomposition& d,
                                                        const TotalSolveOptions& options) {
  detail::require_solvable(g, d);
  SolveStats stats;
  if (d.a1 == 0 && d.a2 == 0) return finish(g, build_case1(g, d), Method::Case1, stats, options);
  if ((d.a1 == 0 && d.b2 == 0) || (d.b1 == 0 && d.a2 == 0)) {
    stats.swapped_sides = d.a1 != 0;
    const Decomposition oriented = stats.swapped_sides ? d.swapped() : d;
    return finish(g, build_case2(g, oriented), Method::Case2, stats, options);
  }
  if (d.b1 == 0 && d.b2 == 0) {
    Work w = build_case3(g, d, stats);
    return finish(g, std::move(w), Method::Case3, stats, options);
  }
  Work w = build_case4(g, d, stats);
  return finish(g, std::move(w), Method::Case4, stats, options);
}

SolveOutcome<TotalColoring> solve_total_coloring(const Graph& g, std::uint64_t seed,
                                                 const TotalSolveOptions& options) {
  if (!is_cubic(g)) throw Error(ErrorCode::NotCubic, "solver needs a 3-regular graph");
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "solver needs a connected graph");
  return constructive_total_coloring(g, decompose(g, max_mpartite_subgraph(g, 2, seed)), options);
}

}  // namespace nsd
