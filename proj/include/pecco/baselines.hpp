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

#include <cmath>
#include <cstddef>
#include <vector>

#include "pecco/mfi.hpp"
#include "pecco/mfo.hpp"
#include "pecco/objective.hpp"
#include "pecco/parallel.hpp"
#include "pecco/report.hpp"
#include "pecco/rng.hpp"

namespace pecco {

/// Representative coordinate for a side: the middle of its half-interval.
inline double side_value(NodeKind side, double ub) { return side == NodeKind::Cloud ? 0.25 * ub : 0.75 * ub; }

/// Each task goes to its preferred side and, within it, to the node with the
/// cheapest migration (ties by id). Capacity is ignored, so nodes may end up
/// overloaded; the report flags it.
inline RunReport run_greedy(const OffloadingProblem& problem) {
  const Scenario& s = problem.scenario();
  AllocationOutcome out;
  out.assignment.assign(s.tasks.size(), std::nullopt);
  out.node_load.resize(s.topology.size());
  for (std::size_t i = 0; i < s.topology.size(); ++i) out.node_load[i] = s.topology.nodes[i].cap_min;

  Position sides(s.tasks.size());
  for (std::size_t k = 0; k < s.tasks.size(); ++k) {
    const Task& task = s.tasks[k];
    const NodeKind side = side_preference(task, problem);
    sides[k] = side_value(side, 1.0);
    const auto candidates = problem.candidates(task.initial_node, side);
    if (candidates.empty()) continue;
    const std::size_t v = candidates.front();
    out.node_load[v] += task.wl;
    out.assignment[k] = id_of(v);
    ++out.allocated_count;
  }
  RunReport report = make_report(problem, "greedy", 0, std::move(sides), std::move(out));
  report.history = {report.breakdown.objective};
  report.evaluations = 1;
  return report;
}

/// Uniform random search over nsa * max_iter positions. Positions are drawn
/// in blocks of nsa (K draws each, in order) and the first strictly best one
/// is kept; history records the best after every block.
inline RunReport run_random_search(const OffloadingProblem& problem, const MfoParams& params) {
  if (params.nsa < 1 || params.max_iter < 1) throw Error("random search needs a budget of at least one sample");
  if (!(params.ub > 0.0) || !std::isfinite(params.ub)) throw Error("ub must be positive");
  const std::size_t dims = problem.task_count();
  Rng rng(params.seed);
  Position best;
  double best_objective = 0.0;
  std::vector<double> history;
  history.reserve(params.max_iter);
  std::vector<Position> block(params.nsa);
  std::vector<double> objectives(params.nsa);
  for (std::size_t it = 0; it < params.max_iter; ++it) {
    for (Position& p : block) p = random_position(dims, params.ub, rng);
    detail::parallel_for(params.nsa, params.workers,
                         [&](std::size_t i) { objectives[i] = problem.evaluate(block[i], params.ub).objective; });
    for (std::size_t i = 0; i < params.nsa; ++i) {
      if (best.empty() || objectives[i] < best_objective) {
        best = block[i];
        best_objective = objectives[i];
      }
    }
    history.push_back(best_objective);
  }
  AllocationOutcome outcome = problem.decode(best, params.ub);
  RunReport report = make_report(problem, "random", params.seed, std::move(best), std::move(outcome));
  report.history = std::move(history);
  report.evaluations = params.nsa * params.max_iter;
  return report;
}

}  // namespace pecco
