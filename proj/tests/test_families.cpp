#include <gtest/gtest.h>

#include <algorithm>

#include "hamspec/certifier.hpp"
#include "hamspec/families.hpp"
#include "oracles.hpp"

using namespace hamspec;

namespace {

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d;
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST(Families, Validity) {
  EXPECT_TRUE(is_valid({Family::N, 5, 2}));
  EXPECT_FALSE(is_valid({Family::N, 4, 2}));
  EXPECT_FALSE(is_valid({Family::L, 5, 0}));
  EXPECT_THROW(family_graph({Family::B, 4, 2}), std::invalid_argument);
  EXPECT_EQ(family_from_string("N"), Family::N);
  EXPECT_FALSE(family_from_string("Q").has_value());
}

TEST(Families, EdgeCountsMatchDefinitions) {
  for (std::size_t k = 1; k <= 6; ++k)
    for (std::size_t n = 2 * k + 1; n <= 40; ++n) {
      const auto N = family_graph({Family::N, n, k}).graph;
      const auto L = family_graph({Family::L, n, k}).graph;
      const auto B = family_graph({Family::B, n, k}).graph;
      EXPECT_EQ(N.edge_count(), oracle::N(n, k).size());
      EXPECT_EQ(L.edge_count(), oracle::L(n, k).size());
      EXPECT_EQ(B.edge_count(), oracle::B(n, k).size());
      EXPECT_EQ(family_edge_count({Family::N, n, k}), oracle::N(n, k).size());
      EXPECT_EQ(family_edge_count({Family::L, n, k}), oracle::L(n, k).size());
      EXPECT_EQ(family_edge_count({Family::B, n, k}), oracle::B(n, k).size());
    }
}

TEST(Families, IsomorphicToDefinitionsUpToDegrees) {
  for (std::size_t k = 1; k <= 4; ++k)
    for (std::size_t n = 2 * k + 1; n <= 20; ++n) {
      EXPECT_EQ(degree_sequence(make_N(n, k)), degree_sequence(oracle::to_graph(n, oracle::N(n, k))));
      EXPECT_EQ(degree_sequence(make_L(n, k)), degree_sequence(oracle::to_graph(n, oracle::L(n, k))));
      EXPECT_EQ(degree_sequence(make_B(n, k).core()), degree_sequence(oracle::to_graph(2 * n, oracle::B(n, k))));
      EXPECT_EQ(min_degree(make_N(n, k)), k);
      EXPECT_EQ(min_degree(make_L(n, k)), k);
      EXPECT_EQ(min_degree(make_B(n, k)), k);
    }
}

TEST(Families, BClassesAreTheMissingBiclique) {
  const std::size_t n = 7, k = 2;
  const auto c = b_classes(n, k);
  const Graph g = make_B(n, k).core();
  for (auto w : c.W)
    for (auto z : c.Z) EXPECT_FALSE(g.adjacent(w, z));
  for (auto w : c.W)
    for (auto x : c.X) EXPECT_TRUE(g.adjacent(w, x));
  for (auto y : c.Y)
    for (auto z : c.Z) EXPECT_TRUE(g.adjacent(y, z));
  EXPECT_EQ(c.W.size(), k);
  EXPECT_EQ(c.Z.size(), n - k);
}

TEST(Families, DeletedEdgeVariants) {
  const auto zz = family_graph({Family::N, 10, 2}, DeletedEdge::ZZ);
  EXPECT_EQ(zz.graph.edge_count(), make_N(10, 2).edge_count() - 1);
  EXPECT_FALSE(zz.graph.adjacent(zz.u, zz.v));
  EXPECT_TRUE(make_N(10, 2).adjacent(zz.u, zz.v));
  const auto yz = family_graph({Family::B, 8, 2}, DeletedEdge::YZ);
  const auto xy = family_graph({Family::B, 8, 2}, DeletedEdge::XY);
  EXPECT_EQ(yz.graph.edge_count(), make_B(8, 2).edge_count() - 1);
  EXPECT_EQ(xy.graph.edge_count(), make_B(8, 2).edge_count() - 1);
  EXPECT_FALSE(allowed(Family::N, DeletedEdge::XY));
  EXPECT_THROW(family_graph({Family::L, 10, 2}, DeletedEdge::YZ), std::invalid_argument);
}

TEST(Recognition, IdentityOnFamilies) {
  for (std::size_t k = 1; k <= 6; ++k)
    for (std::size_t n = 2 * k + 1; n <= 30; ++n) {
      for (Family f : {Family::N, Family::L}) {
        const auto hits = recognize_family(family_graph({f, n, k}).graph);
        EXPECT_NE(std::find(hits.begin(), hits.end(), FamilyParams{f, n, k}), hits.end());
        EXPECT_EQ(hits.size(), k == 1 ? 2u : 1u);
      }
      const auto b = recognize_family(make_B(n, k));
      ASSERT_EQ(b.size(), 1u);
      EXPECT_EQ(b.front(), (FamilyParams{Family::B, n, k}));
    }
}

TEST(Recognition, OneIsTheSameGraphForBothFamilies) {
  for (std::size_t n = 3; n <= 15; ++n) {
    EXPECT_TRUE(is_family(make_N(n, 1), Family::L, 1));
    EXPECT_TRUE(is_family(make_L(n, 1), Family::N, 1));
  }
}

TEST(Recognition, IndependentLayoutsAreRecognised) {
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t n = 2 * k + 1; n <= 14; ++n) {
      EXPECT_TRUE(is_family(oracle::to_graph(n, oracle::N(n, k)), Family::N, k));
      EXPECT_TRUE(is_family(oracle::to_graph(n, oracle::L(n, k)), Family::L, k));
      EXPECT_TRUE(is_family(BipartiteGraph(oracle::to_graph(2 * n, oracle::B(n, k))), k));
    }
}

TEST(Recognition, RejectsNearMisses) {
  EXPECT_TRUE(recognize_family(make_complete(6)).empty());
  EXPECT_TRUE(recognize_family(make_cycle(6)).empty());
  EXPECT_TRUE(recognize_family(family_graph({Family::N, 10, 2}, DeletedEdge::ZZ).graph).empty());
  EXPECT_TRUE(recognize_family(family_graph({Family::B, 8, 2}, DeletedEdge::YZ).bipartite()).empty());
  EXPECT_TRUE(recognize_family(make_complete_bipartite(5)).empty());
}

TEST(Containment, SpanningSubgraphsOfFamilies) {
  const auto n = 12u, k = 2u;
  EXPECT_TRUE(is_spanning_subgraph_of_family(make_N(n, k), Family::N, k));
  EXPECT_TRUE(is_spanning_subgraph_of_family(family_graph({Family::N, n, k}, DeletedEdge::ZZ).graph, Family::N, k));
  EXPECT_TRUE(is_spanning_subgraph_of_family(make_L(n, k), Family::L, k));
  EXPECT_FALSE(is_spanning_subgraph_of_family(make_complete(n), Family::N, k));
  EXPECT_TRUE(is_spanning_subgraph_of_family(family_graph({Family::B, 9, 2}, DeletedEdge::YZ).bipartite(), 2));
  EXPECT_FALSE(is_spanning_subgraph_of_family(make_complete_bipartite(9), 2));
  EXPECT_THROW(is_spanning_subgraph_of_family(make_path(5), Family::N, 2), std::invalid_argument);
}
