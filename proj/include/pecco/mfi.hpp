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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "pecco/mfo.hpp"
#include "pecco/objective.hpp"
#include "pecco/rng.hpp"

namespace pecco {

struct MfiParams : MfoParams {
  double lifetime_threshold = 0.8;  // orphaned moths restart when tau exceeds this
  double oversample_factor = 1.5;   // initial candidates per requested moth

  void validate() const {
    MfoParams::validate();
    if (!(lifetime_threshold >= 0.0 && lifetime_threshold <= 1.0)) {
      throw Error("lifetime_threshold must be in [0, 1]");
    }
    if (!(oversample_factor >= 1.0)) throw Error("oversample_factor must be at least 1");
  }
};

/// Per-task side score: computation cost + lambda * profit + cheapest
/// migration onto that side. Unreachable sides score +inf; ties go to Cloud.
inline double side_score(const Task& task, NodeKind side, const OffloadingProblem& problem) {
  const double comm = problem.cheapest(task.initial_node, side);
  if (!std::isfinite(comm)) return std::numeric_limits<double>::infinity();
  return (task.cost_on(side) + problem.lambda() * task.profit_on(side)) + comm;
}

inline NodeKind side_preference(const Task& task, const OffloadingProblem& problem) {
  return side_score(task, NodeKind::Edge, problem) < side_score(task, NodeKind::Cloud, problem) ? NodeKind::Edge
                                                                                                : NodeKind::Cloud;
}

/// Repeatedly replaces the closest pair of rows (Euclidean; ties go to the
/// lexicographically smallest index pair) by their mean until `target` rows
/// remain. The mean takes the slot of the lower index. Returns the number of
/// merges performed.
inline std::size_t merge_closest_pairs(std::vector<Position>& rows, std::size_t target) {
  std::size_t merges = 0;
  while (rows.size() > target && rows.size() >= 2) {
    std::size_t best_i = 0;
    std::size_t best_j = 1;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
      for (std::size_t j = i + 1; j < rows.size(); ++j) {
        double d2 = 0.0;
        for (std::size_t c = 0; c < rows[i].size(); ++c) {
          const double diff = rows[i][c] - rows[j][c];
          d2 += diff * diff;
        }
        if (d2 < best) {
          best = d2;
          best_i = i;
          best_j = j;
        }
      }
    }
    for (std::size_t c = 0; c < rows[best_i].size(); ++c) {
      rows[best_i][c] = 0.5 * rows[best_i][c] + 0.5 * rows[best_j][c];
    }
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best_j));
    ++merges;
  }
  return merges;
}

struct InitialPopulation {
  std::vector<Position> rows;
  std::size_t candidates = 0;  // rows drawn before merging
  std::size_t merges = 0;
};

/// Profit, cost and density-aware initial population.
///
/// Draws ceil(oversample * nsa) candidate rows; coordinate k is uniform on
/// [0, ub/2) when task k prefers the cloud and on [ub/2, ub) otherwise (one
/// draw per coordinate, row-major). The closest rows are then merged down to
/// nsa.
inline InitialPopulation aware_population(std::size_t nsa, const OffloadingProblem& problem, double ub, Rng& rng,
                                          double oversample = 1.5) {
  const auto& tasks = problem.scenario().tasks;
  std::vector<NodeKind> preferred(tasks.size());
  for (std::size_t k = 0; k < tasks.size(); ++k) preferred[k] = side_preference(tasks[k], problem);

  InitialPopulation pop;
  pop.candidates = static_cast<std::size_t>(std::ceil(oversample * static_cast<double>(nsa)));
  const double half = ub / 2.0;
  pop.rows.assign(pop.candidates, Position(tasks.size()));
  for (Position& row : pop.rows) {
    for (std::size_t k = 0; k < tasks.size(); ++k) {
      const double u = rng.uniform01();
      row[k] = preferred[k] == NodeKind::Cloud ? half * u : half + half * u;
    }
  }
  pop.merges = merge_closest_pairs(pop.rows, nsa);
  return pop;
}

inline std::vector<Position> aware_initialize(std::size_t nsa, const OffloadingProblem& problem, double ub, Rng& rng,
                                              double oversample = 1.5) {
  return aware_population(nsa, problem, ub, rng, oversample).rows;
}

/// Pursuit target blending the paired flame with the leading flames:
/// (paired + w * sum(leaders)) / (1 + w * |leaders|).
inline Position hierarchical_target(std::span<const double> paired, std::span<const Position> leaders, double omega) {
  Position out(paired.begin(), paired.end());
  const double denom = 1.0 + omega * static_cast<double>(leaders.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    double lead = 0.0;
    for (const Position& l : leaders) lead += l[j];
    out[j] = (paired[j] + omega * lead) / denom;
  }
  return out;
}

inline std::span<const Position> leaders_of(std::span<const Position> flames) {
  return flames.first(std::min<std::size_t>(3, flames.size()));
}

/// Target for a moth whose own flame was eliminated. Draws tau; above the
/// threshold the stand-in is a fresh uniform position (K draws), otherwise a
/// uniformly chosen surviving flame (one draw).
template <UniformSource G>
Position lifetime_repair(std::span<const Position> flames, double omega, double threshold, double ub, G& rng) {
  const double tau = rng.uniform01();
  if (tau > threshold) {
    const Position fresh = random_position(flames.front().size(), ub, rng);
    return hierarchical_target(fresh, leaders_of(flames), omega);
  }
  return hierarchical_target(flames[rng.index(flames.size())], leaders_of(flames), omega);
}

inline RunReport run_pecco_mfi(const OffloadingProblem& problem, const MfiParams& params) {
  params.validate();
  Rng rng(params.seed);
  std::vector<Position> moths = aware_initialize(params.nsa, problem, params.ub, rng, params.oversample_factor);
  return detail::run_swarm(
      problem, params, std::move(moths), rng, "mfi", [&params](std::size_t i, const SwarmState& s, Rng& r) {
        const double omega = static_cast<double>(s.iteration) / static_cast<double>(params.max_iter);
        const std::span<const Position> flames(s.flames);
        if (i < flames.size()) return hierarchical_target(flames[i], leaders_of(flames), omega);
        return lifetime_repair(flames, omega, params.lifetime_threshold, params.ub, r);
      });
}

}  // namespace pecco
