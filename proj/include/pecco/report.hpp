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

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pecco/objective.hpp"

namespace pecco {

/// Result of one optimizer run.
struct RunReport {
  std::string algorithm;
  std::uint64_t seed = 0;
  Position best_position;
  AllocationOutcome outcome;
  ObjectiveBreakdown breakdown;
  MetricsReport metrics;
  bool overloaded = false;
  std::vector<double> history;  // best objective after each iteration
  std::size_t evaluations = 0;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// Fills breakdown, metrics and the overload flag from a decoded outcome.
inline RunReport make_report(const OffloadingProblem& problem, std::string algorithm, std::uint64_t seed,
                             Position best, AllocationOutcome outcome) {
  RunReport r;
  r.algorithm = std::move(algorithm);
  r.seed = seed;
  r.best_position = std::move(best);
  r.breakdown = breakdown_of(outcome, problem.scenario(), problem.costs());
  r.metrics = metrics(outcome, r.breakdown, problem.scenario());
  r.overloaded = overloaded(outcome, problem.scenario().topology);
  r.outcome = std::move(outcome);
  return r;
}

}  // namespace pecco
