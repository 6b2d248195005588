#include "nsd/nsd_edge.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "nsd/error.hpp"
#include "nsd/labeling_search.hpp"
#include "pair_plan.hpp"
#include "solve_common.hpp"

namespace nsd {

VertexSums sigma(const Graph& g, const EdgeColoring& c) {
  require_complete(g, c);
  return LabelingSpace{&g, false}.sums(c.colors);
}

VerificationReport verify_nsd(const Graph& g, const EdgeColoring& c) {
  return detail::conflicts_of(g, sigma(g, c));
}

RepairAttempt repair_coloring(const Graph& g, const EdgeColoring& c, const VerificationReport& report,
                              std::span<const int> palette, long long budget) {
  RepairAttempt attempt;
  if (report.ok) {
    attempt.coloring = c;
    return attempt;
  }
  const LabelingSpace space{&g, false};
  RepairResult r = best_first_repair(space, c.colors, palette, {}, budget);
  attempt.steps = r.expanded;
  if (r.solved) attempt.coloring = EdgeColoring{std::move(r.labels)};
  return attempt;
}

namespace {

constexpr std::array<int, 4> kPalette{1, 2, 3, 4};

void internal_check(bool condition, const char* what) {
  if (!condition) throw std::logic_error(std::string("edge construction invariant broken: ") + what);
}

int edge_between(const Graph& g, int a, int b) { return *g.edge_id(a, b); }

std::vector<int> uniform_coloring(const Graph& g, const Decomposition& d, int h, int x, int y) {
  std::vector<int> col(g.size());
  for (int id : d.e_h) col[id] = h;
  for (int id : d.e_x) col[id] = x;
  for (int id : d.e_y) col[id] = y;
  return col;
}

// a1 = b2 = 0: every X vertex has cross degree 3, every Y vertex sits on a
// leftover edge. Cross edges get 1, E_Y gets 2, and one cross edge at the
// lower endpoint of each Y pair gets 3. X sums are then odd, Y sums 4 or 6.
std::vector<int> build_case2(const Graph& g, const Decomposition& d) {
  std::vector<int> col = uniform_coloring(g, d, 1, 1, 2);
  for (int pair_edge : d.e_y) {
    const int low = g.edge(pair_edge).u;
    for (int id : g.incident_edges(low)) {
      if (d.is_cross[id]) {
        col[id] = 3;
        break;
      }
    }
  }
  const std::vector<int> s = LabelingSpace{&g, false}.sums(col);
  for (int v : d.vx) internal_check(s[v] == 3 || s[v] == 5 || s[v] == 7 || s[v] == 9, "case2 X sum");
  for (int v : d.vy) internal_check(s[v] == 4 || s[v] == 6, "case2 Y sum");
  return col;
}

// b1 = b2 = 0: E_X and E_Y are perfect matchings of their sides and H is
// 2-regular. Cross and E_X edges get 1, E_Y gets 2; each pair picks an e_z
// that is recoloured 3, giving the quadruple sums 5/3 on X and 6/4 on Y.
std::vector<int> build_case3(const Graph& g, const Decomposition& d, SolveStats& stats) {
  std::vector<int> col = uniform_coloring(g, d, 1, 1, 2);
  detail::PairPlanner planner(g, d);
  planner.sweep(Side::X, detail::FarEnd::Any);
  planner.sweep(Side::Y, detail::FarEnd::Any);
  for (const detail::PairOp& op : planner.ops()) col[op.e_z] = 3;
  stats.pair_operations = static_cast<int>(planner.ops().size());
  stats.pairing_deadlock = !planner.unseparated().empty();

  const std::vector<int> s = LabelingSpace{&g, false}.sums(col);
  for (const detail::PairOp& op : planner.ops()) {
    const bool near_is_x = d.side[op.near] == Side::X;
    const int x = near_is_x ? op.near : op.far;
    const int x_partner = near_is_x ? op.near_partner : op.far_partner;
    const int y = near_is_x ? op.far : op.near;
    const int y_partner = near_is_x ? op.far_partner : op.near_partner;
    internal_check(s[x] == 5 && s[x_partner] == 3 && s[y] == 6 && s[y_partner] == 4, "case3 quadruple sums");
  }
  return col;
}

// Rewrites for a cross-degree-3 X vertex whose sum clashes with a neighbour.
// Returns true when some colour actually changed.
bool apply_v3x_rule(const Graph& g, const Decomposition& d, std::vector<int>& col, const std::vector<int>& s,
                    int v) {
  if (d.side[v] != Side::X || d.h_degree[v] != 3) return false;
  bool clash = false;
  for (int w : g.neighbors(v)) clash |= s[w] == s[v];
  if (!clash) return false;

  std::vector<int> two, three;
  for (int w : g.neighbors(v)) (d.h_degree[w] == 2 ? two : three).push_back(w);

  auto recolor = [&](int w, int c) {
    const int id = edge_between(g, v, w);
    if (col[id] == c) return false;
    col[id] = c;
    return true;
  };

  if (s[v] == 3) {
    if (two.size() == 2 && three.size() == 1) {
      // A degree-2 neighbour at 7 moves to 8 via colour 2; if both sit at 5,
      // colour 4 lifts the first one to 8.
      for (int y : two) {
        if (s[y] == 7) return recolor(y, 2);
      }
      if (s[two[0]] == 5 && s[two[1]] == 5) return recolor(two[0], 4);
      return false;
    }
    if (two.size() == 1 && three.size() == 2) {
      // Lift the degree-2 neighbour to exactly 8.
      const int y = two[0];
      if (s[y] == 5) return recolor(y, 4);
      if (s[y] == 7) return recolor(y, 2);
      return false;
    }
    if (three.size() == 3 && s[three[0]] == 3 && s[three[1]] == 3 && s[three[2]] == 3) {
      bool changed = false;
      for (int y : three) changed |= recolor(y, 3);
      return changed;
    }
    return false;
  }
  if (s[v] == 5) {
    for (int y : two) {
      if (col[edge_between(g, v, y)] == 3 && s[y] == 7) return recolor(y, 4);
    }
    return false;
  }
  if (s[v] == 7) {
    std::vector<int> lifted;
    for (int y : two) {
      if (col[edge_between(g, v, y)] == 3) lifted.push_back(y);
    }
    if (lifted.size() != 2) return false;
    bool changed = false;
    for (int y : lifted) changed |= recolor(y, 4);
    return changed;
  }
  return false;
}

// Catch-all: cross edges 1, E_X 2, E_Y 3. Pairs are separated first through
// e_z edges towards cross-degree-2 vertices, then through edges towards
// cross-degree-3 vertices; picks become 3. Remaining clashes at v3(x)
// vertices are rewritten by rule until none applies or the cap is reached.
std::vector<int> build_case4(const Graph& g, const Decomposition& d, SolveStats& stats) {
  std::vector<int> col = uniform_coloring(g, d, 1, 2, 3);
  detail::PairPlanner planner(g, d);
  planner.sweep(Side::X, detail::FarEnd::CrossDegree2);
  planner.sweep(Side::X, detail::FarEnd::CrossDegree3);
  planner.sweep(Side::Y, detail::FarEnd::CrossDegree3);
  planner.sweep(Side::Y, detail::FarEnd::CrossDegree2);
  for (const detail::PairOp& op : planner.ops()) col[op.e_z] = 3;
  stats.pair_operations = static_cast<int>(planner.ops().size());
  stats.pairing_deadlock = !planner.unseparated().empty();

  const LabelingSpace space{&g, false};
  const int cap = g.order() + g.size();
  while (stats.rule_applications < cap) {
    const std::vector<int> s = space.sums(col);
    bool applied = false;
    for (int v = 0; v < g.order() && !applied; ++v) applied = apply_v3x_rule(g, d, col, s, v);
    if (!applied) break;
    ++stats.rule_applications;
  }
  return col;
}

SolveOutcome<EdgeColoring> finish(const Graph& g, std::vector<int> col, Method dispatched, SolveStats stats,
                                  const EdgeSolveOptions& options) {
  const LabelingSpace space{&g, false};
  SolveOutcome<EdgeColoring> out;
  out.dispatched = dispatched;

  VerificationReport report = detail::conflicts_of(g, space.sums(col));
  stats.conflicts_before_repair = static_cast<int>(report.conflicts.size());
  if (report.ok) {
    out.method = dispatched;
  } else {
    const long long budget = options.repair_budget_per_component * detail::conflict_components(g, report);
    RepairAttempt attempt = repair_coloring(g, EdgeColoring{col}, report, kPalette, budget);
    stats.repair_steps = attempt.steps;
    if (!attempt.exhausted()) {
      col = std::move(attempt.coloring->colors);
      out.method = Method::Repaired;
    } else {
      bool found = false;
      for (int k : {3, 4}) {
        ExactSearchResult r = exhaustive_labeling(space, k, options.fallback_node_cap);
        stats.fallback_nodes += r.nodes;
        if (r.status == SearchStatus::BudgetExceeded) {
          throw Error(ErrorCode::BudgetExceeded, "edge fallback search hit its node cap at k = " + std::to_string(k));
        }
        if (r.status == SearchStatus::Found) {
          col = std::move(r.labels);
          found = true;
          break;
        }
      }
      if (!found) throw Error(ErrorCode::Infeasible4, "no NSD edge colouring with colours 1..4 exists");
      out.method = Method::Fallback;
    }
  }

  out.coloring.colors = std::move(col);
  internal_check(verify_nsd(g, out.coloring).ok, "returned colouring must verify");
  out.colors_used = distinct_colors({&out.coloring.colors});
  internal_check(out.colors_used.front() >= 1 && out.colors_used.back() <= 4, "palette within 1..4");
  out.stats = stats;
  return out;
}

}  // namespace

SolveOutcome<EdgeColoring> constructive_edge_coloring(const Graph& g, const Decomposition& d,
                                                      const EdgeSolveOptions& options) {
  detail::require_solvable(g, d);
  SolveStats stats;

  if (d.a1 == 0 && d.a2 == 0) {
    // Bipartite cubic: bounded exact search over {1,2,3}.
    const LabelingSpace space{&g, false};
    ExactSearchResult r = exhaustive_labeling(space, 3, options.case1_node_cap);
    stats.fallback_nodes = r.nodes;
    if (r.status == SearchStatus::Found) return finish(g, std::move(r.labels), Method::Case1, stats, options);
    return finish(g, std::vector<int>(g.size(), 1), Method::Case1, stats, options);
  }
  if ((d.a1 == 0 && d.b2 == 0) || (d.b1 == 0 && d.a2 == 0)) {
    stats.swapped_sides = d.a1 != 0;
    const Decomposition oriented = stats.swapped_sides ? d.swapped() : d;
    return finish(g, build_case2(g, oriented), Method::Case2, stats, options);
  }
  if (d.b1 == 0 && d.b2 == 0) {
    std::vector<int> col = build_case3(g, d, stats);
    return finish(g, std::move(col), Method::Case3, stats, options);
  }
  std::vector<int> col = build_case4(g, d, stats);
  return finish(g, std::move(col), Method::Case4, stats, options);
}

SolveOutcome<EdgeColoring> solve_edge_coloring(const Graph& g, std::uint64_t seed, const EdgeSolveOptions& options) {
  if (!is_cubic(g)) throw Error(ErrorCode::NotCubic, "solver needs a 3-regular graph");
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "solver needs a connected graph");
  return constructive_edge_coloring(g, decompose(g, max_mpartite_subgraph(g, 2, seed)), options);
}

}  // namespace nsd
