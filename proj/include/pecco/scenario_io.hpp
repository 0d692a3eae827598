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

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "pecco/workload.hpp"

namespace pecco {

/// Schema or invariant violation in a scenario document; `path` points at the
/// offending field (e.g. "tasks[3].wl").
class ScenarioError : public Error {
public:
  ScenarioError(std::string path, const std::string& message)
      : Error(path + ": " + message), path_(std::move(path)) {}

  const std::string& path() const { return path_; }

private:
  std::string path_;
};

namespace detail {

using nlohmann::json;

inline json range_to_json(const Range& r) { return json::array({r.min, r.max}); }

inline json config_to_json(const GeneratorConfig& c) {
  return json{
      {"n_cloud", c.n_cloud},
      {"n_edge", c.n_edge},
      {"n_tasks", c.n_tasks},
      {"weight_means",
       {{"cc", c.weight_means.cloud_cloud},
        {"ee", c.weight_means.edge_edge},
        {"ce", c.weight_means.cloud_edge},
        {"ec", c.weight_means.edge_cloud}}},
      {"weight_distribution", "uniform"},
      {"weight_spread", c.weight_spread},
      {"length_range", range_to_json(c.length_range)},
      {"capacity_range", range_to_json(c.capacity_range)},
      {"idle_load_range", range_to_json(c.idle_load_range)},
      {"wl_range", range_to_json(c.wl_range)},
      {"cost_cloud_range", range_to_json(c.cost_cloud_range)},
      {"cost_edge_range", range_to_json(c.cost_edge_range)},
      {"profit_cloud_range", range_to_json(c.profit_cloud_range)},
      {"profit_edge_range", range_to_json(c.profit_edge_range)},
      {"link_density", c.link_density},
      {"lambda", c.lambda},
  };
}

/// Typed field access that reports the JSON path of whatever is wrong.
class Reader {
public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

  const json& field(const char* key) const {
    if (!j_.is_object()) throw ScenarioError(path_.empty() ? "$" : path_, "expected an object");
    auto it = j_.find(key);
    if (it == j_.end()) throw ScenarioError(join(key), "missing required field");
    return *it;
  }
  bool has(const char* key) const { return j_.is_object() && j_.contains(key); }

  double number(const char* key) const {
    const json& v = field(key);
    if (!v.is_number()) throw ScenarioError(join(key), "expected a number");
    return v.get<double>();
  }
  long long integer(const char* key) const {
    const json& v = field(key);
    if (!v.is_number_integer()) throw ScenarioError(join(key), "expected an integer");
    return v.get<long long>();
  }
  std::uint64_t unsigned_integer(const char* key) const {
    const json& v = field(key);
    if (!v.is_number_unsigned()) throw ScenarioError(join(key), "expected a nonnegative integer");
    return v.get<std::uint64_t>();
  }
  std::string string(const char* key) const {
    const json& v = field(key);
    if (!v.is_string()) throw ScenarioError(join(key), "expected a string");
    return v.get<std::string>();
  }
  const json& array(const char* key) const {
    const json& v = field(key);
    if (!v.is_array()) throw ScenarioError(join(key), "expected an array");
    return v;
  }
  Range range(const char* key) const {
    const json& v = array(key);
    if (v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw ScenarioError(join(key), "expected [min, max]");
    }
    return {v[0].get<double>(), v[1].get<double>()};
  }
  Reader child(const char* key) const { return Reader(field(key), join(key)); }

  std::string join(const char* key) const { return path_.empty() ? std::string(key) : path_ + "." + key; }

private:
  const json& j_;
  std::string path_;
};

inline GeneratorConfig config_from_json(const Reader& r) {
  GeneratorConfig c;
  c.n_cloud = static_cast<std::size_t>(r.unsigned_integer("n_cloud"));
  c.n_edge = static_cast<std::size_t>(r.unsigned_integer("n_edge"));
  c.n_tasks = static_cast<std::size_t>(r.unsigned_integer("n_tasks"));
  const Reader w = r.child("weight_means");
  c.weight_means = {w.number("cc"), w.number("ee"), w.number("ce"), w.number("ec")};
  c.weight_spread = r.number("weight_spread");
  c.length_range = r.range("length_range");
  c.capacity_range = r.range("capacity_range");
  c.idle_load_range = r.range("idle_load_range");
  c.wl_range = r.range("wl_range");
  c.cost_cloud_range = r.range("cost_cloud_range");
  c.cost_edge_range = r.range("cost_edge_range");
  c.profit_cloud_range = r.range("profit_cloud_range");
  c.profit_edge_range = r.range("profit_edge_range");
  c.link_density = r.number("link_density");
  c.lambda = r.number("lambda");
  return c;
}

}  // namespace detail

inline std::string save_scenario(const Scenario& s) {
  using detail::json;
  json doc;
  doc["name"] = s.name;
  doc["seed"] = s.seed;
  doc["lambda"] = s.lambda;
  if (s.generator) doc["generator"] = detail::config_to_json(*s.generator);
  json nodes = json::array();
  for (const Node& n : s.topology.nodes) {
    nodes.push_back({{"id", n.id}, {"kind", to_string(n.kind)}, {"cap_min", n.cap_min}, {"cap_max", n.cap_max}});
  }
  doc["nodes"] = std::move(nodes);
  json links = json::array();
  for (const Link& l : s.topology.links) {
    links.push_back({{"src", l.src}, {"dst", l.dst}, {"length", l.length}, {"unit_weight", l.unit_weight}});
  }
  doc["links"] = std::move(links);
  json tasks = json::array();
  for (const Task& t : s.tasks) {
    tasks.push_back({{"id", t.id},
                     {"wl", t.wl},
                     {"cost_cloud", t.cost_cloud},
                     {"cost_edge", t.cost_edge},
                     {"profit_cloud", t.profit_cloud},
                     {"profit_edge", t.profit_edge},
                     {"initial_node", t.initial_node}});
  }
  doc["tasks"] = std::move(tasks);
  return doc.dump(2) + "\n";
}

/// Parses and validates a scenario document. Throws ScenarioError on the
/// first schema or invariant violation.
inline Scenario load_scenario(std::string_view text) {
  using detail::json;
  using detail::Reader;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError("$", std::string("malformed document: ") + e.what());
  }
  const Reader root(doc, "");
  Scenario s;
  s.name = root.string("name");
  s.seed = root.unsigned_integer("seed");
  s.lambda = root.number("lambda");
  if (!(s.lambda < 0.0)) throw ScenarioError("lambda", "lambda must be negative");
  if (root.has("generator")) s.generator = detail::config_from_json(root.child("generator"));

  const json& nodes = root.array("nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Reader r(nodes[i], "nodes[" + std::to_string(i) + "]");
    Node n;
    n.id = static_cast<NodeId>(r.integer("id"));
    const std::string kind = r.string("kind");
    if (kind == "cloud") {
      n.kind = NodeKind::Cloud;
    } else if (kind == "edge") {
      n.kind = NodeKind::Edge;
    } else {
      throw ScenarioError(r.join("kind"), "expected \"cloud\" or \"edge\"");
    }
    n.cap_min = r.number("cap_min");
    n.cap_max = r.number("cap_max");
    s.topology.nodes.push_back(n);
  }
  const json& links = root.array("links");
  for (std::size_t q = 0; q < links.size(); ++q) {
    const Reader r(links[q], "links[" + std::to_string(q) + "]");
    s.topology.links.push_back({static_cast<NodeId>(r.integer("src")), static_cast<NodeId>(r.integer("dst")),
                                r.number("length"), r.number("unit_weight")});
  }
  const json& tasks = root.array("tasks");
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    const Reader r(tasks[k], "tasks[" + std::to_string(k) + "]");
    Task t;
    t.id = static_cast<TaskId>(r.integer("id"));
    t.wl = r.number("wl");
    t.cost_cloud = r.number("cost_cloud");
    t.cost_edge = r.number("cost_edge");
    t.profit_cloud = r.number("profit_cloud");
    t.profit_edge = r.number("profit_edge");
    t.initial_node = static_cast<NodeId>(r.integer("initial_node"));
    s.tasks.push_back(t);
  }

  const std::vector<std::string> problems = validate_scenario(s);
  if (!problems.empty()) throw ScenarioError("$", problems.front());
  return s;
}

inline Scenario read_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_scenario(buf.str());
}

inline void write_scenario_file(const Scenario& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write scenario file '" + path + "'");
  out << save_scenario(s);
}

}  // namespace pecco
