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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pecco/topology.hpp"
#include "pecco/workload.hpp"

namespace pecco {

/// An offloading strategy: one coordinate per task, in [0, ub]. Values below
/// ub/2 send the task to the cloud side, the rest to the edge side.
using Position = std::vector<double>;

inline NodeKind side_of(double value, double ub) { return value < ub / 2.0 ? NodeKind::Cloud : NodeKind::Edge; }

struct AllocationOutcome {
  std::vector<std::optional<NodeId>> assignment;  // nullopt = unallocated
  std::vector<double> node_load;                  // by node index, starts at cap_min
  std::size_t allocated_count = 0;

  friend bool operator==(const AllocationOutcome&, const AllocationOutcome&) = default;
};

struct ObjectiveBreakdown {
  double comm = 0.0;
  double comp = 0.0;
  double profit = 0.0;
  double objective = 0.0;

  double cost() const { return comm + comp; }

  friend bool operator==(const ObjectiveBreakdown&, const ObjectiveBreakdown&) = default;
};

struct MetricsReport {
  double objective = 0.0;
  double profit = 0.0;
  double cost = 0.0;
  double profit_cost_ratio = 0.0;
  double allocated_count = 0.0;
  double profit_per_allocation = 0.0;
  double cost_per_allocation = 0.0;
  double utilization_percent = 0.0;
  double profit_per_utilization = 0.0;
  double cost_per_utilization = 0.0;
  bool zero_denominator = false;  // some ratio had a zero denominator and was reported as 0

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

/// Table-level ratios from already aggregated quantities. Zero denominators
/// yield 0 and set the zero_denominator flag.
inline MetricsReport metrics_from_aggregates(double objective, double profit, double cost, double allocated,
                                             double utilization_percent) {
  MetricsReport m;
  m.objective = objective;
  m.profit = profit;
  m.cost = cost;
  m.allocated_count = allocated;
  m.utilization_percent = utilization_percent;
  auto ratio = [&m](double num, double den) {
    if (den == 0.0) {
      m.zero_denominator = true;
      return 0.0;
    }
    return num / den;
  };
  m.profit_cost_ratio = ratio(profit, cost);
  m.profit_per_allocation = ratio(profit, allocated);
  m.cost_per_allocation = ratio(cost, allocated);
  m.profit_per_utilization = ratio(profit, utilization_percent);
  m.cost_per_utilization = ratio(cost, utilization_percent);
  return m;
}

/// Percentage of capacity in use, averaged over nodes. Nodes with cap_max of
/// zero count as 0%.
inline double utilization_percent(const AllocationOutcome& outcome, const Topology& topo) {
  if (topo.nodes.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < topo.nodes.size(); ++i) {
    const double cap = topo.nodes[i].cap_max;
    if (cap > 0.0) sum += outcome.node_load[i] / cap;
  }
  return 100.0 * sum / static_cast<double>(topo.nodes.size());
}

inline bool overloaded(const AllocationOutcome& outcome, const Topology& topo) {
  for (std::size_t i = 0; i < topo.nodes.size(); ++i) {
    if (outcome.node_load[i] > topo.nodes[i].cap_max) return true;
  }
  return false;
}

/// Sum of optimal migration costs from each allocated task's initial node.
inline double communication_cost(const AllocationOutcome& outcome, const Scenario& s, const CostMatrix& costs) {
  double total = 0.0;
  for (std::size_t k = 0; k < s.tasks.size(); ++k) {
    if (const auto& node = outcome.assignment[k]) total += costs.between(s.tasks[k].initial_node, *node);
  }
  return total;
}

inline double computation_cost(const AllocationOutcome& outcome, const Scenario& s) {
  double total = 0.0;
  for (std::size_t k = 0; k < s.tasks.size(); ++k) {
    if (const auto& node = outcome.assignment[k]) total += s.tasks[k].cost_on(s.topology.node(*node).kind);
  }
  return total;
}

inline double profit(const AllocationOutcome& outcome, const Scenario& s) {
  double total = 0.0;
  for (std::size_t k = 0; k < s.tasks.size(); ++k) {
    if (const auto& node = outcome.assignment[k]) total += s.tasks[k].profit_on(s.topology.node(*node).kind);
  }
  return total;
}

inline ObjectiveBreakdown breakdown_of(const AllocationOutcome& outcome, const Scenario& s, const CostMatrix& costs) {
  ObjectiveBreakdown b;
  b.comm = communication_cost(outcome, s, costs);
  b.comp = computation_cost(outcome, s);
  b.profit = profit(outcome, s);
  b.objective = (b.comm + b.comp) + s.lambda * b.profit;
  return b;
}

inline MetricsReport metrics(const AllocationOutcome& outcome, const ObjectiveBreakdown& b, const Scenario& s) {
  return metrics_from_aggregates(b.objective, b.profit, b.cost(), static_cast<double>(outcome.allocated_count),
                                 utilization_percent(outcome, s.topology));
}

/// A scenario bundled with its optimal-cost matrix and, per (initial node,
/// side), the reachable candidate nodes in decode order: ascending cost,
/// then ascending id. Immutable once built; safe to share between threads.
class OffloadingProblem {
public:
  explicit OffloadingProblem(Scenario scenario, std::size_t workers = 1)
      : scenario_(std::move(scenario)) {
    costs_ = all_pairs_optimal_cost(scenario_.topology, workers);
    build_candidates();
  }

  OffloadingProblem(Scenario scenario, CostMatrix costs) : scenario_(std::move(scenario)), costs_(std::move(costs)) {
    if (costs_.size() != scenario_.topology.size()) throw Error("cost matrix does not match topology size");
    build_candidates();
  }

  const Scenario& scenario() const { return scenario_; }
  const CostMatrix& costs() const { return costs_; }
  std::size_t task_count() const { return scenario_.tasks.size(); }
  double lambda() const { return scenario_.lambda; }

  /// Reachable nodes of `side` as seen from `from`, cheapest first.
  std::span<const std::size_t> candidates(NodeId from, NodeKind side) const {
    return candidates_[index_of(from) * 2 + (side == NodeKind::Cloud ? 0 : 1)];
  }

  /// Cheapest optimal cost from `from` to any node of `side`; +inf if none.
  double cheapest(NodeId from, NodeKind side) const {
    auto c = candidates(from, side);
    return c.empty() ? std::numeric_limits<double>::infinity() : costs_(index_of(from), c.front());
  }

  /// Capacity-aware decoding: tasks in ascending id go to the first
  /// candidate of their side with room left; otherwise they stay unallocated.
  AllocationOutcome decode(std::span<const double> position, double ub) const {
    const auto& tasks = scenario_.tasks;
    if (position.size() != tasks.size()) {
      throw Error("position has " + std::to_string(position.size()) + " coordinates, scenario has " +
                  std::to_string(tasks.size()) + " tasks");
    }
    const auto& nodes = scenario_.topology.nodes;
    AllocationOutcome out;
    out.assignment.assign(tasks.size(), std::nullopt);
    out.node_load.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) out.node_load[i] = nodes[i].cap_min;

    for (std::size_t k = 0; k < tasks.size(); ++k) {
      const Task& task = tasks[k];
      for (std::size_t v : candidates(task.initial_node, side_of(position[k], ub))) {
        if (out.node_load[v] + task.wl <= nodes[v].cap_max) {
          out.node_load[v] += task.wl;
          out.assignment[k] = id_of(v);
          ++out.allocated_count;
          break;
        }
      }
    }
    return out;
  }

  ObjectiveBreakdown evaluate(std::span<const double> position, double ub) const {
    return breakdown_of(decode(position, ub), scenario_, costs_);
  }

private:
  void build_candidates() {
    const auto& nodes = scenario_.topology.nodes;
    const std::size_t n = nodes.size();
    candidates_.assign(n * 2, {});
    for (std::size_t from = 0; from < n; ++from) {
      for (std::size_t v = 0; v < n; ++v) {
        if (!std::isfinite(costs_(from, v))) continue;
        candidates_[from * 2 + (nodes[v].kind == NodeKind::Cloud ? 0 : 1)].push_back(v);
      }
      for (int side = 0; side < 2; ++side) {
        auto& list = candidates_[from * 2 + side];
        std::stable_sort(list.begin(), list.end(),
                         [&](std::size_t a, std::size_t b) { return costs_(from, a) < costs_(from, b); });
      }
    }
  }

  Scenario scenario_;
  CostMatrix costs_;
  std::vector<std::vector<std::size_t>> candidates_;
};

inline AllocationOutcome decode(std::span<const double> position, const Scenario& s, const CostMatrix& costs,
                                double ub = 1.0) {
  return OffloadingProblem(s, costs).decode(position, ub);
}

inline ObjectiveBreakdown evaluate(std::span<const double> position, const Scenario& s, const CostMatrix& costs,
                                   double ub = 1.0) {
  return OffloadingProblem(s, costs).evaluate(position, ub);
}

}  // namespace pecco
