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
#include <vector>

#include "pecco/baselines.hpp"
#include "pecco/objective.hpp"

namespace pecco {

struct ExhaustiveResult {
  std::uint64_t pattern = 0;  // bit k set = task k+1 on the edge side
  Position position;
  ObjectiveBreakdown breakdown;
  std::uint64_t patterns = 0;
};

/// Best objective over the decoder image of all 2^K side patterns. Each
/// pattern is evaluated at the midpoints of its half-intervals; the lowest
/// pattern index wins ties.
inline ExhaustiveResult exhaustive_optimum(const OffloadingProblem& problem, double ub = 1.0) {
  constexpr std::size_t kMaxTasks = 24;
  const std::size_t dims = problem.task_count();
  if (dims > kMaxTasks) throw Error("exhaustive search is limited to 24 tasks");

  ExhaustiveResult best;
  best.patterns = std::uint64_t{1} << dims;
  Position p(dims);
  for (std::uint64_t mask = 0; mask < best.patterns; ++mask) {
    for (std::size_t k = 0; k < dims; ++k) {
      p[k] = side_value((mask >> k) & 1U ? NodeKind::Edge : NodeKind::Cloud, ub);
    }
    const ObjectiveBreakdown b = problem.evaluate(p, ub);
    if (mask == 0 || b.objective < best.breakdown.objective) {
      best.pattern = mask;
      best.position = p;
      best.breakdown = b;
    }
  }
  return best;
}

}  // namespace pecco
