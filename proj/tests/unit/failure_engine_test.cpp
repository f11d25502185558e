#include "mlcn/failure_engine.hpp"

#include <gtest/gtest.h>

#include <initializer_list>
#include <utility>

#include "mlcn/errors.hpp"

namespace mlcn {
namespace {

Graph make(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

LayeredNetwork bare(Graph l1) {
  const std::size_t n = l1.vertex_count();
  return LayeredNetwork(std::move(l1), Graph(n), Graph(n));
}

ScenarioConfig small(FailureMode mode, std::size_t failures = 8) {
  ScenarioConfig cfg;
  cfg.mode = mode;
  cfg.failures = failures;
  cfg.seed = 4242;
  return cfg;
}

constexpr FailureMode kModes[] = {FailureMode::kSebc, FailureMode::kDebc, FailureMode::kSnbc,
                                  FailureMode::kDnbc};

TEST(ModeTest, NamesRoundTrip) {
  for (FailureMode m : kModes) EXPECT_EQ(parse_mode(mode_name(m)), m);
  EXPECT_FALSE(parse_mode("DEBC").has_value());
  EXPECT_FALSE(parse_mode("").has_value());
  EXPECT_TRUE(is_static(FailureMode::kSnbc));
  EXPECT_FALSE(is_static(FailureMode::kDebc));
  EXPECT_TRUE(is_node_mode(FailureMode::kDnbc));
  EXPECT_FALSE(is_node_mode(FailureMode::kSebc));
}

TEST(ScenarioConfigTest, Validation) {
  EXPECT_NO_THROW(small(FailureMode::kSnbc, 99).validate());
  EXPECT_THROW(small(FailureMode::kSnbc, 100).validate(), ArgumentError);
  EXPECT_THROW(small(FailureMode::kDnbc, 99 + 1).validate(), ArgumentError);
  EXPECT_NO_THROW(small(FailureMode::kDebc, 150).validate());
  EXPECT_THROW(small(FailureMode::kDebc, 0).validate(), ArgumentError);
  ScenarioConfig none = small(FailureMode::kDebc);
  none.replicates = 0;
  EXPECT_THROW(none.validate(), ArgumentError);
  ScenarioConfig unordered = small(FailureMode::kDebc);
  unordered.mlcn.l2_p = 0.03;
  EXPECT_THROW(unordered.validate(), ArgumentError);
}

TEST(ScenarioConfigTest, WrongModeRejected) {
  EXPECT_THROW(run_sebc(small(FailureMode::kDebc)), ArgumentError);
  EXPECT_THROW(run_dnbc(small(FailureMode::kSnbc)), ArgumentError);
}

TEST(StepTest, PathTopEdgeIsMiddle) {
  LayeredNetwork net = bare(make(4, {{0, 1}, {1, 2}, {2, 3}}));
  const MetricsRecord rec = fail_top_edges(net, 1);
  EXPECT_EQ(rec.failed_edges, (std::vector<Edge>{{1, 2}}));
  EXPECT_EQ(rec.layers[0].tne, 2u);
  EXPECT_TRUE(rec.failed_nodes.empty());
}

TEST(StepTest, CycleTieGoesToSmallestEdge) {
  LayeredNetwork net = bare(make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  const auto rec = fail_next_edge(net, 1);
  ASSERT_TRUE(rec.has_value());
  EXPECT_EQ(rec->failed_edges, (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(rec->step, 1u);
}

TEST(StepTest, StarCenterFailsFirst) {
  LayeredNetwork net = bare(make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
  const MetricsRecord rec = fail_top_nodes(net, 1);
  EXPECT_EQ(rec.failed_nodes, (std::vector<Vertex>{0}));
  EXPECT_EQ(rec.layers[0].tne, 0u);
  EXPECT_FALSE(rec.layers[0].aspl.has_value());
  EXPECT_EQ(rec.layers[0].tspc, 0u);
}

TEST(StepTest, PathMiddleNodeFails) {
  LayeredNetwork net = bare(make(3, {{0, 1}, {1, 2}}));
  const auto rec = fail_next_node(net, 1);
  ASSERT_TRUE(rec.has_value());
  EXPECT_EQ(rec->failed_nodes, (std::vector<Vertex>{1}));
}

TEST(StepTest, AllZeroScoresRemoveLowestId) {
  LayeredNetwork net = bare(make(6, {{4, 5}, {0, 3}, {1, 2}}));
  EXPECT_EQ(fail_next_node(net, 1)->failed_nodes, (std::vector<Vertex>{0}));
  EXPECT_EQ(fail_next_node(net, 2)->failed_nodes, (std::vector<Vertex>{1}));
}

TEST(StepTest, ExhaustionIsSignalled) {
  LayeredNetwork edges = bare(make(2, {{0, 1}}));
  ASSERT_TRUE(fail_next_edge(edges, 1).has_value());
  EXPECT_FALSE(fail_next_edge(edges, 2).has_value());

  LayeredNetwork nodes = bare(make(2, {{0, 1}}));
  ASSERT_TRUE(fail_next_node(nodes, 1).has_value());
  EXPECT_FALSE(fail_next_node(nodes, 2).has_value());
}

TEST(StepTest, BatchLargerThanEdgeSetFailsAll) {
  LayeredNetwork net = bare(make(3, {{0, 1}, {1, 2}}));
  const MetricsRecord rec = fail_top_edges(net, 5);
  EXPECT_EQ(rec.failed_edges.size(), 2u);
  EXPECT_EQ(rec.layers[0].tne, 0u);
}

TEST(ScenarioTest, RecordCountsAndSteps) {
  for (FailureMode m : kModes) {
    const MetricsSeries s = run_scenario(small(m, 6), 0);
    ASSERT_EQ(s.records.size(), 6u) << mode_name(m);
    EXPECT_FALSE(s.truncated);
    EXPECT_EQ(s.mode, m);
    for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(s.records[i].step, i + 1);
    EXPECT_EQ(s.initial.has_value(), !is_static(m));
    for (const auto& rec : s.records) EXPECT_EQ(rec.baseline.has_value(), is_static(m));
  }
}

TEST(ScenarioTest, EdgeModesDecayL1Linearly) {
  const MetricsSeries dynamic = run_debc(small(FailureMode::kDebc, 20));
  const std::size_t e0 = dynamic.initial->at(0).tne;
  for (const auto& rec : dynamic.records) EXPECT_EQ(rec.layers[0].tne, e0 - rec.step);

  const MetricsSeries fixed = run_sebc(small(FailureMode::kSebc, 10));
  for (const auto& rec : fixed.records) {
    EXPECT_EQ(rec.layers[0].tne, rec.baseline->at(0).tne - rec.step);
  }
}

TEST(ScenarioTest, NodeModesKillExactlyTheTargets) {
  const MetricsSeries s = run_dnbc(small(FailureMode::kDnbc, 10),
                                   0, [](const MetricsRecord& rec, const LayeredNetwork& net) {
                                     EXPECT_EQ(net.l1().live_count(), 100 - rec.step);
                                     EXPECT_TRUE(net.dependency_holds());
                                   });
  EXPECT_EQ(s.records.size(), 10u);
  const MetricsSeries snbc = run_snbc(small(FailureMode::kSnbc, 3), 0);
  EXPECT_EQ(snbc.records[0].failed_nodes.size(), 1u);
  EXPECT_GE(snbc.records[0].baseline->at(0).tne - snbc.records[0].layers[0].tne, 1u);
}

// A static K=1 build uses the same construction seeds as a dynamic build,
// so both remove the same element and record the same metrics.
TEST(ScenarioTest, StaticAndDynamicAgreeAtFirstStep) {
  const MetricsSeries sebc = run_sebc(small(FailureMode::kSebc, 1));
  const MetricsSeries debc = run_debc(small(FailureMode::kDebc, 1));
  EXPECT_EQ(sebc.records[0].failed_edges, debc.records[0].failed_edges);
  EXPECT_EQ(sebc.records[0].layers, debc.records[0].layers);
  EXPECT_EQ(*sebc.records[0].baseline, *debc.initial);

  const MetricsSeries snbc = run_snbc(small(FailureMode::kSnbc, 1));
  const MetricsSeries dnbc = run_dnbc(small(FailureMode::kDnbc, 1));
  EXPECT_EQ(snbc.records[0].failed_nodes, dnbc.records[0].failed_nodes);
  EXPECT_EQ(snbc.records[0].layers, dnbc.records[0].layers);
}

TEST(ScenarioTest, Deterministic) {
  for (FailureMode m : kModes) {
    EXPECT_EQ(run_scenario(small(m, 5), 0), run_scenario(small(m, 5), 0)) << mode_name(m);
  }
  ScenarioConfig other = small(FailureMode::kDebc, 5);
  other.seed += 1;
  EXPECT_NE(run_debc(small(FailureMode::kDebc, 5)).records, run_debc(other).records);
}

TEST(ReplicateTest, IndependentOfOtherReplicatesAndWorkers) {
  ScenarioConfig cfg = small(FailureMode::kDebc, 5);
  cfg.replicates = 4;
  const auto serial = run_replicates(cfg, 1);
  ASSERT_EQ(serial.size(), 4u);
  EXPECT_EQ(run_replicates(cfg, 3), serial);
  for (std::size_t r = 0; r < 4; ++r) {
    EXPECT_EQ(serial[r].replicate, r);
    EXPECT_EQ(serial[r], run_debc(cfg, r));
  }
  EXPECT_NE(serial[0].records, serial[1].records);
}

TEST(ReplicateTest, ValidationPrecedesWork) {
  ScenarioConfig cfg = small(FailureMode::kSnbc, 100);
  EXPECT_THROW(run_replicates(cfg, 2), ArgumentError);
}

TEST(TruncationTest, DynamicEdgeRunStopsWhenL1IsEmpty) {
  ScenarioConfig cfg = small(FailureMode::kDebc, 400);
  const MetricsSeries s = run_debc(cfg);
  EXPECT_TRUE(s.truncated);
  EXPECT_FALSE(s.truncation_reason.empty());
  EXPECT_EQ(s.records.size(), s.initial->at(0).tne);
  EXPECT_EQ(s.records.back().layers[0].tne, 0u);
}

TEST(TruncationTest, DynamicNodeRunStopsWithOneVertexLeft) {
  ScenarioConfig cfg;
  cfg.mlcn.nodes = 30;
  cfg.mlcn.l1_p = 0.15;
  cfg.mlcn.l2_p = 0.4;
  cfg.mlcn.l3_m = 10;
  cfg.mode = FailureMode::kDnbc;
  cfg.failures = 29;
  const MetricsSeries s = run_dnbc(cfg);
  EXPECT_FALSE(s.truncated);
  EXPECT_EQ(s.records.size(), 29u);
  EXPECT_EQ(s.records.back().layers[0].tne, 0u);
}

}  // namespace
}  // namespace mlcn
