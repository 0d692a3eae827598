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
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pecco/rng.hpp"
#include "pecco/topology.hpp"

namespace pecco {

/// Raised for invalid inputs: bad configs, malformed scenario documents,
/// dimension mismatches.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using TaskId = int;

struct Task {
  TaskId id = 0;
  double wl = 0.0;
  double cost_cloud = 0.0;
  double cost_edge = 0.0;
  double profit_cloud = 0.0;
  double profit_edge = 0.0;
  NodeId initial_node = 0;

  double cost_on(NodeKind side) const { return side == NodeKind::Cloud ? cost_cloud : cost_edge; }
  double profit_on(NodeKind side) const { return side == NodeKind::Cloud ? profit_cloud : profit_edge; }

  friend bool operator==(const Task&, const Task&) = default;
};

struct Range {
  double min = 0.0;
  double max = 0.0;

  friend bool operator==(const Range&, const Range&) = default;
};

/// Class means of the per-link unit weight, by (source side, target side).
struct WeightMeans {
  double cloud_cloud = 1.0;
  double edge_edge = 6.0;
  double cloud_edge = 2.0;
  double edge_cloud = 4.0;

  double of(NodeKind src, NodeKind dst) const {
    if (src == NodeKind::Cloud) return dst == NodeKind::Cloud ? cloud_cloud : cloud_edge;
    return dst == NodeKind::Cloud ? edge_cloud : edge_edge;
  }

  friend bool operator==(const WeightMeans&, const WeightMeans&) = default;
};

/// Synthetic scenario parameters. Node counts and class weight means follow
/// the reference experiment; every other range is a free choice.
struct GeneratorConfig {
  std::size_t n_cloud = 20;
  std::size_t n_edge = 30;
  std::size_t n_tasks = 200;
  WeightMeans weight_means{};
  double weight_spread = 0.5;  // unit weight ~ U[(1 - s) mean, (1 + s) mean]
  Range length_range{1.0, 5.0};
  Range capacity_range{10.0, 40.0};  // cap_max
  Range idle_load_range{0.0, 3.0};   // cap_min, capped at cap_max
  Range wl_range{1.0, 10.0};
  Range cost_cloud_range{1.0, 10.0};
  Range cost_edge_range{1.0, 10.0};
  Range profit_cloud_range{10.0, 50.0};
  Range profit_edge_range{10.0, 50.0};
  double link_density = 0.1;
  double lambda = -8.0;

  friend bool operator==(const GeneratorConfig&, const GeneratorConfig&) = default;
};

struct Scenario {
  std::string name;
  std::uint64_t seed = 0;  // 0 for hand-written scenarios
  double lambda = -8.0;
  Topology topology;
  std::vector<Task> tasks;
  std::optional<GeneratorConfig> generator;  // recorded for generated scenarios

  std::size_t task_count() const { return tasks.size(); }

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Throws Error naming the first violated invariant.
inline void validate_config(const GeneratorConfig& cfg) {
  if (cfg.n_cloud == 0) throw Error("generator: n_cloud must be positive");
  if (cfg.n_edge == 0) throw Error("generator: n_edge must be positive");
  auto check = [](const Range& r, const char* name) {
    if (!(r.min >= 0.0) || !(r.min <= r.max) || !std::isfinite(r.max)) {
      throw Error(std::string("generator: ") + name + " must satisfy 0 <= min <= max");
    }
  };
  check(cfg.length_range, "length_range");
  check(cfg.capacity_range, "capacity_range");
  check(cfg.idle_load_range, "idle_load_range");
  check(cfg.wl_range, "wl_range");
  check(cfg.cost_cloud_range, "cost_cloud_range");
  check(cfg.cost_edge_range, "cost_edge_range");
  check(cfg.profit_cloud_range, "profit_cloud_range");
  check(cfg.profit_edge_range, "profit_edge_range");
  if (cfg.n_tasks > 0 && !(cfg.wl_range.min > 0.0)) throw Error("generator: wl_range.min must be positive");
  const WeightMeans& w = cfg.weight_means;
  if (!(w.cloud_cloud > 0.0 && w.edge_edge > 0.0 && w.cloud_edge > 0.0 && w.edge_cloud > 0.0)) {
    throw Error("generator: weight_means must be positive");
  }
  if (!(cfg.weight_spread >= 0.0 && cfg.weight_spread <= 1.0)) throw Error("generator: weight_spread must be in [0, 1]");
  if (!(cfg.link_density >= 0.0 && cfg.link_density <= 1.0)) throw Error("generator: link_density must be in [0, 1]");
  if (!(cfg.lambda < 0.0)) throw Error("generator: lambda must be negative");
}

/// Checks scenario-level invariants on top of validate_topology. Returns a
/// list of human-readable problems, empty when the scenario is usable.
inline std::vector<std::string> validate_scenario(const Scenario& s) {
  std::vector<std::string> problems;
  for (const Violation& v : validate_topology(s.topology)) problems.push_back(v.message);
  if (!(s.lambda < 0.0)) problems.emplace_back("lambda must be negative");
  const std::size_t n = s.topology.size();
  for (std::size_t k = 0; k < s.tasks.size(); ++k) {
    const Task& t = s.tasks[k];
    const std::string where = "task " + std::to_string(t.id);
    if (t.id != static_cast<TaskId>(k + 1)) problems.push_back(where + ": ids must be contiguous 1..K in order");
    if (!(t.wl > 0.0) || !std::isfinite(t.wl)) problems.push_back(where + ": wl must be positive");
    for (double v : {t.cost_cloud, t.cost_edge, t.profit_cloud, t.profit_edge}) {
      if (!(v >= 0.0) || !std::isfinite(v)) {
        problems.push_back(where + ": costs and profits must be finite and nonnegative");
        break;
      }
    }
    if (t.initial_node < 1 || static_cast<std::size_t>(t.initial_node) > n) {
      problems.push_back(where + ": initial_node does not exist");
    }
  }
  return problems;
}

/// Deterministic synthetic scenario. Draw order: per node (cap_max, cap_min);
/// backbone permutation; per backbone link (length, weight); density pass
/// over ordered pairs (src asc, dst asc) skipping backbone pairs, each
/// (coin, [length, weight]); per task (wl, cost_cloud, cost_edge,
/// profit_cloud, profit_edge, initial_node).
inline Scenario generate_scenario(const GeneratorConfig& cfg, std::uint64_t seed) {
  validate_config(cfg);
  Rng rng(seed);
  Scenario s;
  s.name = "synthetic-" + std::to_string(seed);
  s.seed = seed;
  s.lambda = cfg.lambda;
  s.generator = cfg;

  const std::size_t n = cfg.n_cloud + cfg.n_edge;
  s.topology.nodes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Node node;
    node.id = id_of(i);
    node.kind = i < cfg.n_cloud ? NodeKind::Cloud : NodeKind::Edge;
    node.cap_max = rng.uniform(cfg.capacity_range.min, cfg.capacity_range.max);
    node.cap_min = std::min(rng.uniform(cfg.idle_load_range.min, cfg.idle_load_range.max), node.cap_max);
    s.topology.nodes.push_back(node);
  }

  auto make_link = [&](std::size_t a, std::size_t b) {
    const double mean = cfg.weight_means.of(s.topology.nodes[a].kind, s.topology.nodes[b].kind);
    Link link;
    link.src = id_of(a);
    link.dst = id_of(b);
    link.length = rng.uniform(cfg.length_range.min, cfg.length_range.max);
    link.unit_weight = rng.uniform((1.0 - cfg.weight_spread) * mean, (1.0 + cfg.weight_spread) * mean);
    return link;
  };

  // Directed Hamiltonian cycle over a random permutation: every ordered pair
  // is reachable before any density sampling happens.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.index(i)]);
  std::vector<bool> in_backbone(n * n, false);
  if (n > 1) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t a = order[i];
      const std::size_t b = order[(i + 1) % n];
      s.topology.links.push_back(make_link(a, b));
      in_backbone[a * n + b] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || in_backbone[a * n + b]) continue;
      if (rng.uniform01() < cfg.link_density) s.topology.links.push_back(make_link(a, b));
    }
  }

  s.tasks.reserve(cfg.n_tasks);
  for (std::size_t k = 0; k < cfg.n_tasks; ++k) {
    Task t;
    t.id = static_cast<TaskId>(k + 1);
    t.wl = rng.uniform(cfg.wl_range.min, cfg.wl_range.max);
    t.cost_cloud = rng.uniform(cfg.cost_cloud_range.min, cfg.cost_cloud_range.max);
    t.cost_edge = rng.uniform(cfg.cost_edge_range.min, cfg.cost_edge_range.max);
    t.profit_cloud = rng.uniform(cfg.profit_cloud_range.min, cfg.profit_cloud_range.max);
    t.profit_edge = rng.uniform(cfg.profit_edge_range.min, cfg.profit_edge_range.max);
    t.initial_node = id_of(rng.index(n));
    s.tasks.push_back(t);
  }
  return s;
}

}  // namespace pecco
