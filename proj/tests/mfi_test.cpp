/*
Copyright 2026 The PECCO Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pecco/mfi.hpp"
#include "pecco/oracle.hpp"
#include "scripted.hpp"

namespace pecco {
namespace {

/// Cloud node 1 and edge node 2 joined by a zero-length link both ways, so
/// both sides are equally cheap to reach from either node.
Scenario zero_distance_pair(const Task& task) {
  Scenario s;
  s.lambda = -8.0;
  s.topology.nodes = {{1, NodeKind::Cloud, 0.0, 10.0}, {2, NodeKind::Edge, 0.0, 10.0}};
  s.topology.links = {{1, 2, 0.0, 2.0}, {2, 1, 0.0, 4.0}};
  s.tasks = {task};
  return s;
}

TEST(SidePreference, ProfitOutweighsEqualCost) {
  const OffloadingProblem p(zero_distance_pair({1, 1.0, 2.0, 2.0, 10.0, 1.0, 1}));
  EXPECT_EQ(side_score(p.scenario().tasks[0], NodeKind::Cloud, p), -78.0);
  EXPECT_EQ(side_score(p.scenario().tasks[0], NodeKind::Edge, p), -6.0);
  EXPECT_EQ(side_preference(p.scenario().tasks[0], p), NodeKind::Cloud);
}

TEST(SidePreference, TieGoesToCloud) {
  const OffloadingProblem p(zero_distance_pair({1, 1.0, 3.0, 3.0, 5.0, 5.0, 2}));
  EXPECT_EQ(side_preference(p.scenario().tasks[0], p), NodeKind::Cloud);
}

TEST(SidePreference, UnreachableEdgeScoresInfinity) {
  Scenario s = zero_distance_pair({1, 1.0, 9.0, 0.0, 0.0, 100.0, 1});
  s.topology.links.clear();
  const OffloadingProblem p(s);
  EXPECT_TRUE(std::isinf(side_score(p.scenario().tasks[0], NodeKind::Edge, p)));
  EXPECT_EQ(side_preference(p.scenario().tasks[0], p), NodeKind::Cloud);
}

TEST(MergeClosestPairs, MidpointOfClosestPair) {
  std::vector<Position> rows{{0.0, 0.0}, {0.1, 0.0}, {1.0, 1.0}};
  EXPECT_EQ(merge_closest_pairs(rows, 2), 1u);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_DOUBLE_EQ(rows[0][0], 0.05);
  EXPECT_EQ(rows[0][1], 0.0);
  EXPECT_EQ(rows[1], (Position{1.0, 1.0}));
}

TEST(MergeClosestPairs, TiesPickLowestIndexPair) {
  std::vector<Position> rows{{0.0}, {1.0}, {2.0}};
  merge_closest_pairs(rows, 2);
  EXPECT_EQ(rows, (std::vector<Position>{{0.5}, {2.0}}));
}

TEST(AwareInitialize, OversamplesAndMergesDownToNsa) {
  const OffloadingProblem p(generate_scenario({}, 3));
  Rng rng(1);
  const InitialPopulation pop = aware_population(30, p, 1.0, rng);
  EXPECT_EQ(pop.candidates, 45u);
  EXPECT_EQ(pop.merges, 15u);
  EXPECT_EQ(pop.rows.size(), 30u);
  Rng odd(1);
  const InitialPopulation odd_pop = aware_population(7, p, 1.0, odd);
  EXPECT_EQ(odd_pop.candidates, 11u);  // ceil(10.5)
  EXPECT_EQ(odd_pop.merges, 4u);
}

TEST(AwareInitializeProperty, CoordinatesFollowSidePreference) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const OffloadingProblem p(testing::small_generated(3, 5, 30, seed));
    Rng rng(seed);
    const double ub = 2.0;
    const std::vector<Position> rows = aware_initialize(9, p, ub, rng);
    ASSERT_EQ(rows.size(), 9u);
    for (const Position& row : rows) {
      for (std::size_t k = 0; k < row.size(); ++k) {
        EXPECT_EQ(side_of(row[k], ub), side_preference(p.scenario().tasks[k], p));
        EXPECT_GE(row[k], 0.0);
        EXPECT_LE(row[k], ub);
      }
    }
  }
}

TEST(HierarchicalTarget, ZeroOmegaReturnsPairedFlame) {
  const std::vector<Position> leaders{{0.4}, {0.6}, {0.8}};
  EXPECT_EQ(hierarchical_target(Position{0.2}, leaders, 0.0), (Position{0.2}));
}

TEST(HierarchicalTarget, ThreeLeaderBlend) {
  const std::vector<Position> leaders{{0.4, 0.4}, {0.6, 0.6}, {0.8, 0.8}};
  const Position t = hierarchical_target(Position{0.2, 0.2}, leaders, 0.5);
  EXPECT_NEAR(t[0], 0.44, 1e-15);
  EXPECT_NEAR(t[1], 0.44, 1e-15);
}

TEST(HierarchicalTarget, TwoLeaderBlend) {
  const std::vector<Position> leaders{{0.4}, {0.6}};
  EXPECT_NEAR(hierarchical_target(Position{0.2}, leaders, 0.5)[0], (0.2 + 0.5 * 1.0) / 2.0, 1e-15);
}

TEST(HierarchicalTarget, FixedPoint) {
  const std::vector<Position> leaders{{0.3}, {0.3}, {0.3}};
  EXPECT_DOUBLE_EQ(hierarchical_target(Position{0.3}, leaders, 1.0)[0], 0.3);
}

TEST(HierarchicalTargetProperty, ConvexCombination) {
  std::mt19937_64 gen(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t count = 2 + trial % 2;
    std::vector<Position> leaders(count, Position(4));
    Position paired(4);
    for (double& x : paired) x = u(gen);
    for (auto& l : leaders) {
      for (double& x : l) x = u(gen);
    }
    const Position t = hierarchical_target(paired, leaders, u(gen));
    for (std::size_t j = 0; j < 4; ++j) {
      double lo = paired[j];
      double hi = paired[j];
      for (const auto& l : leaders) {
        lo = std::min(lo, l[j]);
        hi = std::max(hi, l[j]);
      }
      EXPECT_GE(t[j], lo - 1e-12);
      EXPECT_LE(t[j], hi + 1e-12);
    }
  }
}

TEST(LifetimeRepair, HighTauRestartsFromFreshPosition) {
  const std::vector<Position> flames{{0.1, 0.1}, {0.2, 0.2}, {0.3, 0.3}};
  testing::ScriptedStream s({0.9, 0.33, 0.66});
  EXPECT_EQ(lifetime_repair(flames, 0.0, 0.8, 1.0, s), (Position{0.33, 0.66}));
  EXPECT_EQ(s.consumed(), 3u);
}

TEST(LifetimeRepair, LowTauPicksSurvivingFlame) {
  const std::vector<Position> flames{{0.1, 0.1}, {0.2, 0.2}, {0.3, 0.3}};
  testing::ScriptedStream s({0.5, 0.7});
  EXPECT_EQ(lifetime_repair(flames, 0.0, 0.8, 1.0, s), flames[2]);
  EXPECT_EQ(s.consumed(), 2u);
}

TEST(LifetimeRepair, ThresholdOneNeverRestarts) {
  const std::vector<Position> flames{{0.1}, {0.2}};
  testing::ScriptedStream s({0.9999999, 0.0});
  EXPECT_EQ(lifetime_repair(flames, 0.0, 1.0, 1.0, s), flames[0]);
}

TEST(LifetimeRepair, BlendsLeadersSoWorstFlameIsNeverPursuedAlone) {
  const std::vector<Position> flames{{0.1}, {0.2}, {0.3}, {0.9}};
  testing::ScriptedStream s({0.1, 0.99});  // picks flames[3], the worst
  const Position t = lifetime_repair(flames, 0.5, 0.8, 1.0, s);
  EXPECT_LT(t[0], 0.9);
  EXPECT_NEAR(t[0], (0.9 + 0.5 * 0.6) / 2.5, 1e-15);
}

TEST(RunPeccoMfi, FindsDominantSide) {
  const OffloadingProblem p(testing::edge_dominance_scenario());
  MfiParams params;
  params.nsa = 10;
  params.max_iter = 20;
  const RunReport r = run_pecco_mfi(p, params);
  EXPECT_EQ(r.algorithm, "mfi");
  EXPECT_EQ(r.outcome.assignment[0], std::optional<NodeId>(2));
  EXPECT_EQ(r.breakdown.objective, testing::kEdgeDominanceOptimum);
}

TEST(RunPeccoMfi, Deterministic) {
  const OffloadingProblem p(testing::small_generated(3, 4, 25, 9));
  MfiParams params;
  params.nsa = 12;
  params.max_iter = 30;
  params.seed = 5;
  const RunReport a = run_pecco_mfi(p, params);
  EXPECT_EQ(a, run_pecco_mfi(p, params));
  params.workers = 4;
  EXPECT_EQ(a, run_pecco_mfi(p, params));
  for (std::size_t i = 1; i < a.history.size(); ++i) EXPECT_LE(a.history[i], a.history[i - 1]);
}

TEST(RunPeccoMfi, NearOptimalOnTinyInstances) {
  const Scenario s = testing::small_generated(2, 2, 6, 17);
  const OffloadingProblem p(s);
  const double optimum = exhaustive_optimum(p).breakdown.objective;
  int within = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    MfiParams params;
    params.seed = seed;
    const RunReport r = run_pecco_mfi(p, params);
    EXPECT_GE(r.breakdown.objective, optimum - 1e-9 * std::abs(optimum));
    if (std::abs(r.breakdown.objective - optimum) <= 0.05 * std::abs(optimum)) ++within;
  }
  EXPECT_GE(within, 8);
}

TEST(RunPeccoMfi, RejectsBadThreshold) {
  const OffloadingProblem p(testing::edge_dominance_scenario());
  MfiParams params;
  params.lifetime_threshold = 1.5;
  EXPECT_THROW(run_pecco_mfi(p, params), Error);
}

}  // namespace
}  // namespace pecco
