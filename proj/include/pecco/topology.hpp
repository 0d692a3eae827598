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
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "pecco/parallel.hpp"

namespace pecco {

/// Node identifiers are 1-based and contiguous; index_of maps them onto
/// storage positions.
using NodeId = int;

constexpr std::size_t index_of(NodeId id) { return static_cast<std::size_t>(id - 1); }
constexpr NodeId id_of(std::size_t index) { return static_cast<NodeId>(index + 1); }

enum class NodeKind { Cloud, Edge };

inline const char* to_string(NodeKind kind) { return kind == NodeKind::Cloud ? "cloud" : "edge"; }

struct Node {
  NodeId id = 0;
  NodeKind kind = NodeKind::Cloud;
  double cap_min = 0.0;  // load of the idle node
  double cap_max = 0.0;  // highest load the node may carry

  friend bool operator==(const Node&, const Node&) = default;
};

/// Directed link. Existence, length and weight need not be symmetric.
struct Link {
  NodeId src = 0;
  NodeId dst = 0;
  double length = 0.0;
  double unit_weight = 0.0;

  friend bool operator==(const Link&, const Link&) = default;
};

struct Topology {
  std::vector<Node> nodes;  // nodes[i].id == i + 1
  std::vector<Link> links;

  std::size_t size() const { return nodes.size(); }
  const Node& node(NodeId id) const { return nodes[index_of(id)]; }

  friend bool operator==(const Topology&, const Topology&) = default;
};

enum class ViolationKind {
  DanglingEndpoint,
  NegativeLength,
  NegativeWeight,
  NonFiniteValue,
  DuplicateId,
  NonContiguousId,
  CapacityOrder,
  NegativeCapacity,
  KindOrder,
  MissingCloud,
  MissingEdge,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

using ValidationReport = std::vector<Violation>;

/// Collects every invariant violation of `topo`; an empty report means the
/// topology is usable by the rest of the library.
inline ValidationReport validate_topology(const Topology& topo) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, std::string msg) { report.push_back({kind, std::move(msg)}); };

  const std::size_t n = topo.nodes.size();
  std::vector<int> seen(n + 1, 0);
  bool has_cloud = false;
  bool has_edge = false;
  bool edge_seen = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Node& node = topo.nodes[i];
    const std::string where = "node " + std::to_string(node.id);
    if (node.id >= 1 && static_cast<std::size_t>(node.id) <= n) {
      if (seen[node.id]++ == 1) add(ViolationKind::DuplicateId, where + ": duplicate id");
    }
    if (node.id != id_of(i)) {
      add(ViolationKind::NonContiguousId,
          where + ": ids must be contiguous 1..N in order (expected " + std::to_string(id_of(i)) + ")");
    }
    if (!std::isfinite(node.cap_min) || !std::isfinite(node.cap_max)) {
      add(ViolationKind::NonFiniteValue, where + ": non-finite capacity");
    } else {
      if (node.cap_min < 0.0) add(ViolationKind::NegativeCapacity, where + ": cap_min < 0");
      if (node.cap_min > node.cap_max) add(ViolationKind::CapacityOrder, where + ": cap_min > cap_max");
    }
    if (node.kind == NodeKind::Cloud) {
      has_cloud = true;
      if (edge_seen) add(ViolationKind::KindOrder, where + ": cloud node numbered after an edge node");
    } else {
      has_edge = true;
      edge_seen = true;
    }
  }
  if (!has_cloud) add(ViolationKind::MissingCloud, "topology has no cloud node");
  if (!has_edge) add(ViolationKind::MissingEdge, "topology has no edge node");

  for (std::size_t q = 0; q < topo.links.size(); ++q) {
    const Link& link = topo.links[q];
    const std::string where = "link " + std::to_string(q) + " (" + std::to_string(link.src) + "->" +
                              std::to_string(link.dst) + ")";
    auto exists = [n](NodeId id) { return id >= 1 && static_cast<std::size_t>(id) <= n; };
    if (!exists(link.src) || !exists(link.dst)) add(ViolationKind::DanglingEndpoint, where + ": dangling endpoint");
    if (!std::isfinite(link.length) || !std::isfinite(link.unit_weight)) {
      add(ViolationKind::NonFiniteValue, where + ": non-finite length or weight");
      continue;
    }
    if (link.length < 0.0) add(ViolationKind::NegativeLength, where + ": negative length");
    if (link.unit_weight < 0.0) add(ViolationKind::NegativeWeight, where + ": negative weight");
  }
  return report;
}

/// Money spent moving one task across `link`.
inline double link_cost(const Link& link) { return link.length * link.unit_weight; }

/// Dense N x N matrix of optimal directed communication costs, indexed by
/// node index (id - 1). Unreachable pairs hold +infinity.
class CostMatrix {
public:
  CostMatrix() = default;
  explicit CostMatrix(std::size_t n)
      : n_(n), data_(n * n, std::numeric_limits<double>::infinity()) {
    for (std::size_t i = 0; i < n; ++i) data_[i * n + i] = 0.0;
  }

  std::size_t size() const { return n_; }
  double operator()(std::size_t from, std::size_t to) const { return data_[from * n_ + to]; }
  double& operator()(std::size_t from, std::size_t to) { return data_[from * n_ + to]; }

  /// Lookup by 1-based node id.
  double between(NodeId from, NodeId to) const { return (*this)(index_of(from), index_of(to)); }

  friend bool operator==(const CostMatrix&, const CostMatrix&) = default;

private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Single-source optimal costs from `source` (Dijkstra; weights are
/// nonnegative). Path costs accumulate source -> destination.
inline std::vector<double> single_source_cost(const Topology& topo, std::size_t source) {
  const std::size_t n = topo.size();
  std::vector<std::vector<std::pair<std::size_t, double>>> out(n);
  for (const Link& link : topo.links) {
    if (link.src == link.dst) continue;
    out[index_of(link.src)].emplace_back(index_of(link.dst), link_cost(link));
  }

  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  std::vector<bool> done(n, false);
  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  dist[source] = 0.0;
  frontier.emplace(0.0, source);
  while (!frontier.empty()) {
    const auto [d, u] = frontier.top();
    frontier.pop();
    if (done[u]) continue;
    done[u] = true;
    for (const auto& [v, w] : out[u]) {
      const double candidate = d + w;
      if (candidate < dist[v]) {
        dist[v] = candidate;
        frontier.emplace(candidate, v);
      }
    }
  }
  return dist;
}

/// Precomputes the optimal communication cost between every ordered node
/// pair. Rows are independent, so `workers` > 1 fills them concurrently.
inline CostMatrix all_pairs_optimal_cost(const Topology& topo, std::size_t workers = 1) {
  const std::size_t n = topo.size();
  CostMatrix costs(n);
  detail::parallel_for(n, workers, [&](std::size_t s) {
    const std::vector<double> row = single_source_cost(topo, s);
    for (std::size_t t = 0; t < n; ++t) costs(s, t) = row[t];
  });
  return costs;
}

}  // namespace pecco
