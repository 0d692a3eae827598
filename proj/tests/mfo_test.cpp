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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pecco/mfo.hpp"
#include "scripted.hpp"

namespace pecco {
namespace {

TEST(RandomPosition, ScalesUniformsByUpperBound) {
  testing::ScriptedStream s({0.2, 0.9});
  EXPECT_EQ(random_position(2, 1.0, s), (Position{0.2, 0.9}));
  EXPECT_EQ(s.consumed(), 2u);
  testing::ScriptedStream half({0.5});
  EXPECT_EQ(random_position(1, 2.0, half), (Position{1.0}));
}

TEST(RandomPosition, StaysInRange) {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    for (double x : random_position(20, 3.0, rng)) {
      EXPECT_GE(x, 0.0);
      EXPECT_LE(x, 3.0);
    }
  }
}

TEST(FlameCount, Endpoints) {
  EXPECT_EQ(flame_count(30, 100, 100), 1u);
  EXPECT_EQ(flame_count(30, 1, 100), 30u);
  EXPECT_EQ(flame_count(30, 50, 100), 16u);  // round(15.5), half away from zero
}

TEST(FlameCount, NonIncreasingAndReachesOne) {
  for (std::size_t n : {2u, 5u, 30u, 31u}) {
    for (std::size_t mi : {1u, 7u, 100u}) {
      std::size_t prev = n;
      for (std::size_t ci = 1; ci <= mi; ++ci) {
        const std::size_t k = flame_count(n, ci, mi);
        EXPECT_LE(k, prev);
        EXPECT_GE(k, 1u);
        prev = k;
      }
      EXPECT_EQ(flame_count(n, mi, mi), 1u);
    }
  }
}

TEST(SpiralStep, HandValues) {
  const Position moth{0.0};
  const Position target{1.0};
  EXPECT_EQ(spiral_step(moth, target, 1.0, Position{0.0}, 1.0)[0], 1.0);   // 2 before clamping
  EXPECT_EQ(spiral_step(moth, target, 1.0, Position{-1.0}, 1.0)[0], 1.0);  // 1.3679 before clamping
  EXPECT_NEAR(spiral_step(moth, target, 1.0, Position{-0.5}, 1.0)[0], 0.39346934028736658, 1e-12);
  EXPECT_NEAR(spiral_step(moth, target, 1.0, Position{-1.0}, 2.0)[0], 1.3678794411714423, 1e-12);
}

TEST(SpiralStep, AlwaysClamped) {
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> pos(0.0, 1.0);
  std::uniform_real_distribution<double> t(-2.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const Position out = spiral_step(Position{pos(gen), pos(gen)}, Position{pos(gen), pos(gen)}, 1.0,
                                     Position{t(gen), t(gen)}, 1.0);
    for (double x : out) {
      EXPECT_GE(x, 0.0);
      EXPECT_LE(x, 1.0);
    }
  }
}

TEST(MfoPair, OwnFlameOrLast) {
  EXPECT_EQ(mfo_pair(3, 10), 3u);
  EXPECT_EQ(mfo_pair(17, 10), 10u);
  EXPECT_EQ(mfo_pair(10, 10), 10u);
}

TEST(SpiralLowerBound, LinearFromMinusOneToMinusTwo) {
  EXPECT_EQ(spiral_lower_bound(1, 100), -1.0);
  EXPECT_EQ(spiral_lower_bound(100, 100), -2.0);
  EXPECT_EQ(spiral_lower_bound(1, 1), -1.0);
  EXPECT_NEAR(spiral_lower_bound(50, 99), -1.5, 1e-15);
}

TEST(RunMfo, FindsDominantSide) {
  const OffloadingProblem p(testing::edge_dominance_scenario());
  MfoParams params;
  params.nsa = 10;
  params.max_iter = 20;
  params.seed = 4;
  const RunReport r = run_mfo(p, params);
  EXPECT_EQ(r.outcome.assignment[0], std::optional<NodeId>(2));
  EXPECT_EQ(r.breakdown.objective, testing::kEdgeDominanceOptimum);
}

TEST(RunMfo, DeterministicAcrossRunsAndWorkers) {
  const OffloadingProblem p(testing::small_generated(3, 4, 25, 2));
  MfoParams params;
  params.nsa = 12;
  params.max_iter = 30;
  params.seed = 77;
  const RunReport a = run_mfo(p, params);
  EXPECT_EQ(a, run_mfo(p, params));
  params.workers = 3;
  EXPECT_EQ(a, run_mfo(p, params));
}

TEST(RunMfo, ElitistHistoryNeverIncreases) {
  const OffloadingProblem p(testing::small_generated(3, 4, 25, 3));
  MfoParams params;
  params.nsa = 10;
  params.max_iter = 40;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    params.seed = seed;
    const RunReport r = run_mfo(p, params);
    ASSERT_EQ(r.history.size(), params.max_iter);
    for (std::size_t i = 1; i < r.history.size(); ++i) EXPECT_LE(r.history[i], r.history[i - 1]);
    EXPECT_EQ(r.history.back(), r.breakdown.objective);
    EXPECT_EQ(r.evaluations, params.nsa * params.max_iter);
  }
}

TEST(RunMfo, PaperLiteralSelectionRuns) {
  const OffloadingProblem p(testing::small_generated(3, 4, 25, 3));
  MfoParams params;
  params.nsa = 10;
  params.max_iter = 40;
  params.elitism = false;
  const RunReport r = run_mfo(p, params);
  EXPECT_EQ(r.history.back(), r.breakdown.objective);
  EXPECT_FALSE(r.overloaded);
}

TEST(RunMfo, AcceptsInitialPositions) {
  const OffloadingProblem p(testing::edge_dominance_scenario());
  MfoParams params;
  params.nsa = 2;
  params.max_iter = 1;
  const RunReport r = run_mfo(p, params, std::vector<Position>{{0.9}, {0.1}});
  EXPECT_EQ(r.best_position, (Position{0.9}));
  EXPECT_THROW(run_mfo(p, params, std::vector<Position>{{0.9}}), Error);
  EXPECT_THROW(run_mfo(p, params, std::vector<Position>{{0.9, 0.1}, {0.1, 0.2}}), Error);
}

TEST(RunMfo, RejectsBadParams) {
  const OffloadingProblem p(testing::edge_dominance_scenario());
  MfoParams params;
  params.nsa = 1;
  EXPECT_THROW(run_mfo(p, params), Error);
  params = {};
  params.max_iter = 0;
  EXPECT_THROW(run_mfo(p, params), Error);
  params = {};
  params.ub = 0.0;
  EXPECT_THROW(run_mfo(p, params), Error);
}

}  // namespace
}  // namespace pecco
