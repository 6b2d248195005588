#include <gtest/gtest.h>

#include "nsd/bipartition.hpp"
#include "nsd/error.hpp"
#include "nsd/generate.hpp"
#include "nsd/nsd_total.hpp"
#include "support.hpp"

using namespace nsd;

namespace {

void expect_valid(const Graph& g, const SolveOutcome<TotalColoring>& o) {
  ASSERT_EQ(static_cast<int>(o.coloring.edge_colors.size()), g.size());
  ASSERT_EQ(static_cast<int>(o.coloring.vertex_colors.size()), g.order());
  for (int c : o.coloring.edge_colors) EXPECT_TRUE(c == 1 || c == 2);
  for (int c : o.coloring.vertex_colors) EXPECT_TRUE(c == 1 || c == 2);
  EXPECT_TRUE(testsupport::raw_distinguishing(
      g, testsupport::raw_sums(g, o.coloring.edge_colors, o.coloring.vertex_colors)));
}

}  // namespace

TEST(TSums, AddsVertexColour) {
  const Graph k2 = complete_graph(2);
  const TotalColoring c{{1}, {1, 2}};
  EXPECT_EQ(t_sums(k2, c), (TotalSums{2, 3}));
  EXPECT_TRUE(verify_total(k2, c).ok);
  EXPECT_FALSE(verify_total(k2, TotalColoring{{2}, {1, 1}}).ok);
}

TEST(TSums, C4Alternating) {
  const Graph c = cycle_graph(4);
  const TotalColoring col{{1, 1, 1, 1}, {1, 2, 1, 2}};
  EXPECT_EQ(t_sums(c, col), (TotalSums{3, 4, 3, 4}));
  EXPECT_TRUE(verify_total(c, col).ok);
}

TEST(TSums, MissingColour) {
  EXPECT_THROW(t_sums(complete_graph(2), TotalColoring{{1}, {1, 0}}), Error);
}

TEST(TotalSolve, K33CaseOneArithmetic) {
  const Graph g = complete_bipartite(3, 3);
  const Decomposition d = decompose(g, max_mpartite_subgraph(g, 2, 0));
  const auto o = constructive_total_coloring(g, d);
  EXPECT_EQ(o.method, Method::Case1);
  const TotalSums t = t_sums(g, o.coloring);
  for (int v : d.vx) EXPECT_EQ(t[v], 4);
  for (int v : d.vy) EXPECT_EQ(t[v], 5);
}

TEST(TotalSolve, SmallNamedGraphs) {
  for (const Graph& g : {complete_graph(4), prism_graph(), petersen_graph(), complete_bipartite(3, 3)}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) expect_valid(g, solve_total_coloring(g, seed));
  }
}

TEST(TotalSolve, RandomCubicGraphs) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Graph g = random_cubic(6 + 2 * static_cast<int>(seed % 10), seed + 1000);
    if (!is_connected(g)) continue;
    expect_valid(g, solve_total_coloring(g, seed));
  }
}

TEST(TotalSolve, RejectsBadInput) {
  try {
    solve_total_coloring(cycle_graph(4), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCubic);
  }
}

TEST(TotalRepair, FixesAllOnesOnK4) {
  const Graph g = complete_graph(4);
  const TotalColoring ones{std::vector<int>(6, 1), std::vector<int>(4, 1)};
  const std::vector<int> palette{1, 2};
  const auto r = repair_total_coloring(g, ones, verify_total(g, ones), palette, 10'000);
  ASSERT_FALSE(r.exhausted());
  EXPECT_TRUE(verify_total(g, *r.coloring).ok);
}
