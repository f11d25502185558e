#include "mlcn/graph.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "mlcn/edge_list.hpp"
#include "mlcn/errors.hpp"
#include "mlcn/paths.hpp"
#include "mlcn/random.hpp"

namespace mlcn {
namespace {

TEST(GraphTest, RejectsSelfLoopsAndOutOfRange) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), ArgumentError);
  EXPECT_THROW(g.add_edge(0, 3), ArgumentError);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(GraphTest, ParallelEdgeIsStoredOnce) {
  Graph g(3);
  EXPECT_TRUE(g.add_edge(0, 2));
  EXPECT_FALSE(g.add_edge(2, 0));
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_EQ(g.degree(0), 1u);
  EXPECT_EQ(g.degree(2), 1u);
}

TEST(GraphTest, EdgeIsCanonical) {
  const Edge e{5, 2};
  EXPECT_EQ(e.u, 2u);
  EXPECT_EQ(e.v, 5u);
  EXPECT_EQ(e, (Edge{2, 5}));
}

TEST(GraphTest, EdgesAreAscending) {
  Graph g(4);
  g.add_edge(3, 2);
  g.add_edge(1, 0);
  g.add_edge(0, 3);
  const std::vector<Edge> expected{{0, 1}, {0, 3}, {2, 3}};
  EXPECT_EQ(g.edges(), expected);
}

TEST(GraphTest, KillKeepsIdsAndStripsEdges) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  EXPECT_EQ(g.kill(1), 3u);
  EXPECT_FALSE(g.is_live(1));
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.live_count(), 3u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.has_edge(2, 3));
  EXPECT_THROW(g.kill(1), ArgumentError);
  EXPECT_THROW(g.add_edge(1, 0), ArgumentError);
  EXPECT_EQ(g.live_vertices(), (std::vector<Vertex>{0, 2, 3}));
}

TEST(GraphTest, TneDropsByOnePerRemoval) {
  Rng rng(9);
  Graph g(12);
  for (Vertex a = 0; a < 12; ++a) {
    for (Vertex b = a + 1; b < 12; ++b) {
      if (rng.bernoulli(0.4)) g.add_edge(a, b);
    }
  }
  for (const Edge& e : g.edges()) {
    const std::size_t before = tne(g);
    ASSERT_TRUE(g.remove_edge(e));
    EXPECT_EQ(tne(g), before - 1);
  }
  EXPECT_EQ(tne(g), 0u);
  EXPECT_FALSE(g.remove_edge(Edge{0, 1}));
  EXPECT_EQ(tne(g), 0u);
}

TEST(GraphTest, ComponentLabelsUseSmallestId) {
  Graph g(6);
  g.add_edge(4, 2);
  g.add_edge(2, 5);
  g.add_edge(1, 3);
  EXPECT_EQ(component_labels(g), (std::vector<Vertex>{0, 1, 2, 1, 2, 2}));
  EXPECT_FALSE(is_connected(g));
}

TEST(GraphTest, ConnectivityIgnoresDeadVertices) {
  Graph g(3);
  g.add_edge(0, 1);
  EXPECT_FALSE(is_connected(g));
  g.kill(2);
  EXPECT_TRUE(is_connected(g));
}

TEST(EdgeListTest, WritesOnePairPerLineAndReadsBack) {
  Rng rng(4);
  Graph g(9);
  for (Vertex a = 0; a < 9; ++a) {
    for (Vertex b = a + 1; b < 9; ++b) {
      if (rng.bernoulli(0.3)) g.add_edge(a, b);
    }
  }
  std::stringstream text;
  write_edge_list(text, g);
  EXPECT_EQ(read_edge_list(text, 9), g);

  std::ostringstream small;
  Graph p(3);
  p.add_edge(2, 1);
  p.add_edge(0, 1);
  write_edge_list(small, p);
  EXPECT_EQ(small.str(), "0 1\n1 2\n");
}

TEST(EdgeListTest, RejectsMalformedLines) {
  std::istringstream bad_id("0 7\n");
  EXPECT_THROW(read_edge_list(bad_id, 3), ArgumentError);
  std::istringstream junk("0 1 2\n");
  EXPECT_THROW(read_edge_list(junk, 3), ArgumentError);
  std::istringstream loop("1 1\n");
  EXPECT_THROW(read_edge_list(loop, 3), ArgumentError);
}

}  // namespace
}  // namespace mlcn
