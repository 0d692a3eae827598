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
#include <stdexcept>
#include <vector>

#include "pecco/workload.hpp"

namespace pecco::testing {

/// Replays a fixed list of uniforms; index(n) consumes one value u and
/// returns floor(u * n).
class ScriptedStream {
public:
  explicit ScriptedStream(std::vector<double> values) : values_(std::move(values)) {}

  double uniform01() {
    if (next_ >= values_.size()) throw std::out_of_range("scripted stream exhausted");
    return values_[next_++];
  }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform01() * static_cast<double>(n)); }
  std::size_t consumed() const { return next_; }

private:
  std::vector<double> values_;
  std::size_t next_ = 0;
};

/// One task on edge node 2 where the edge strictly dominates: cheaper,
/// more profitable, no migration needed.
inline Scenario edge_dominance_scenario() {
  Scenario s;
  s.name = "dominance";
  s.lambda = -8.0;
  s.topology.nodes = {{1, NodeKind::Cloud, 0.0, 10.0}, {2, NodeKind::Edge, 0.0, 10.0}};
  s.topology.links = {{1, 2, 1.0, 2.0}, {2, 1, 1.0, 4.0}};
  s.tasks = {{1, 2.0, 5.0, 1.0, 3.0, 9.0, 2}};
  return s;
}

// Edge: 1 - 8 * 9 + 0 = -71. Cloud: 5 - 8 * 3 + 4 = -15.
inline constexpr double kEdgeDominanceOptimum = -71.0;

}  // namespace pecco::testing
