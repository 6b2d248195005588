#include <gtest/gtest.h>

#include "nsd/error.hpp"
#include "nsd/generate.hpp"
#include "nsd/nsd_edge.hpp"
#include "nsd/nsd_total.hpp"
#include "nsd/oracle.hpp"
#include "support.hpp"

using namespace nsd;

TEST(Oracle, K2HasNoEdgeColouring) {
  const auto r = exact_gndi(complete_graph(2), 6);
  EXPECT_EQ(r.status, ExactStatus::Infeasible);
  EXPECT_FALSE(r.value.has_value());
}

TEST(Oracle, PathOnThree) {
  const auto r = exact_gndi(path_graph(3), 4);
  ASSERT_EQ(r.status, ExactStatus::Feasible);
  EXPECT_EQ(*r.value, 1);
  EXPECT_EQ(*r.value, testsupport::brute_force_min(path_graph(3), 4, false));
  EXPECT_EQ(*exact_gndi(path_graph(4), 4).value, 2);
  EXPECT_TRUE(verify_nsd(path_graph(3), r.witness).ok);
}

TEST(Oracle, EdgelessGraph) {
  try {
    exact_gndi(Graph(3), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EdgelessGraph);
  }
}

TEST(Oracle, K4MatchesBruteForce) {
  const Graph g = complete_graph(4);
  const auto r = exact_gndi(g, 4);
  ASSERT_EQ(r.status, ExactStatus::Feasible);
  EXPECT_EQ(*r.value, 3);
  EXPECT_EQ(*r.value, testsupport::brute_force_min(g, 4, false));
}

TEST(Oracle, TotalK2MatchesBruteForce) {
  const Graph g = complete_graph(2);
  const auto r = exact_tgndi(g, 3);
  ASSERT_EQ(r.status, ExactStatus::Feasible);
  EXPECT_EQ(*r.value, 2);
  EXPECT_EQ(*r.value, testsupport::brute_force_min(g, 3, true));
  EXPECT_TRUE(verify_total(g, r.witness).ok);
}

TEST(Oracle, SingleVertexTotal) {
  const auto r = exact_tgndi(Graph(1), 2);
  ASSERT_EQ(r.status, ExactStatus::Feasible);
  EXPECT_EQ(*r.value, 1);
}

TEST(Oracle, SmallGraphsAgreeWithBruteForce) {
  for (const Graph& g : {cycle_graph(4), cycle_graph(5), path_graph(4), complete_graph(4)}) {
    EXPECT_EQ(*exact_gndi(g, 4).value, testsupport::brute_force_min(g, 4, false));
    EXPECT_EQ(*exact_tgndi(g, 3).value, testsupport::brute_force_min(g, 3, true));
  }
}

TEST(Oracle, MinimalAndMonotone) {
  for (const Graph& g : enumerate_cubic(8)) {
    const auto r = exact_gndi(g, 4);
    ASSERT_EQ(r.status, ExactStatus::Feasible);
    const int k = *r.value;
    EXPECT_TRUE(verify_nsd(g, r.witness).ok);
    if (k > 1) {
      EXPECT_EQ(nsd_edge_feasible(g, k - 1), false);
    }
    for (int j = k; j <= 4; ++j) EXPECT_EQ(nsd_edge_feasible(g, j), true);
  }
}

TEST(Oracle, NodeCapGivesUnknown) {
  const auto r = exact_gndi(petersen_graph(), 4, 3);
  EXPECT_EQ(r.status, ExactStatus::Unknown);
  EXPECT_EQ(nsd_edge_feasible(petersen_graph(), 3, 3), std::nullopt);
}
