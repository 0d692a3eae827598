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

// pecco: command line front end for scenario generation, single runs,
// benchmarks and the exhaustive oracle.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pecco/pecco.hpp"

namespace {

using nlohmann::json;

struct Options {
  std::optional<std::string> scenario;
  std::uint64_t seed = 1;
  std::uint64_t gen_seed = 1;
  std::size_t repeats = 10;
  std::vector<std::string> algorithms{"mfi", "mfo"};
  std::size_t moths = 30;
  std::size_t iters = 100;
  std::optional<double> lambda;
  double ub = 1.0;
  double b = 1.0;
  double tau_threshold = 0.8;
  bool elitism = true;
  std::string format = "markdown";
  std::optional<std::string> out;
  std::size_t workers = 1;
  std::size_t jobs = 1;
  bool timing = false;
  pecco::GeneratorConfig generator{};
};

pecco::MfiParams params_of(const Options& o) {
  pecco::MfiParams p;
  p.nsa = o.moths;
  p.max_iter = o.iters;
  p.ub = o.ub;
  p.b = o.b;
  p.elitism = o.elitism;
  p.lifetime_threshold = o.tau_threshold;
  p.seed = o.seed;
  p.workers = o.workers;
  return p;
}

pecco::BenchConfig bench_config_of(const Options& o) {
  pecco::BenchConfig cfg;
  cfg.scenario_path = o.scenario;
  cfg.generator = o.generator;
  cfg.generator_seed = o.gen_seed;
  cfg.lambda = o.lambda;
  cfg.algorithms = o.algorithms;
  cfg.repeats = o.repeats;
  cfg.base_seed = o.seed;
  cfg.params = params_of(o);
  cfg.jobs = o.jobs;
  cfg.record_timing = o.timing;
  return cfg;
}

json breakdown_json(const pecco::ObjectiveBreakdown& b) {
  return {{"comm", b.comm}, {"comp", b.comp}, {"profit", b.profit}, {"objective", b.objective}};
}

json metrics_json(const pecco::MetricsReport& m) {
  return {{"objective", m.objective},
          {"profit", m.profit},
          {"cost", m.cost},
          {"profit_cost_ratio", m.profit_cost_ratio},
          {"allocated", m.allocated_count},
          {"profit_per_alloc", m.profit_per_allocation},
          {"cost_per_alloc", m.cost_per_allocation},
          {"utilization_pct", m.utilization_percent},
          {"profit_per_util", m.profit_per_utilization},
          {"cost_per_util", m.cost_per_utilization},
          {"zero_denominator", m.zero_denominator}};
}

std::string pattern_string(const pecco::Position& p, double ub) {
  std::string s;
  for (double v : p) s += pecco::side_of(v, ub) == pecco::NodeKind::Cloud ? 'C' : 'E';
  return s;
}

void emit(const Options& o, const std::string& text) {
  if (o.out) {
    std::ofstream f(*o.out, std::ios::binary);
    if (!f) throw pecco::Error("cannot write '" + *o.out + "'");
    f << text;
  } else {
    std::cout << text;
  }
}

int cmd_generate(const Options& o) {
  pecco::GeneratorConfig cfg = o.generator;
  if (o.lambda) cfg.lambda = *o.lambda;
  emit(o, pecco::save_scenario(pecco::generate_scenario(cfg, o.seed)));
  return 0;
}

int cmd_run(const Options& o) {
  if (o.algorithms.size() != 1) throw pecco::Error("run expects exactly one algorithm in --algorithms");
  const pecco::BenchConfig cfg = bench_config_of(o);
  const pecco::OffloadingProblem problem(pecco::resolve_scenario(cfg), o.workers);
  const pecco::RunReport r = pecco::run_algorithm(o.algorithms.front(), problem, params_of(o));
  const json doc{{"algorithm", r.algorithm},
                 {"scenario", problem.scenario().name},
                 {"seed", r.seed},
                 {"breakdown", breakdown_json(r.breakdown)},
                 {"metrics", metrics_json(r.metrics)},
                 {"overloaded", r.overloaded},
                 {"evaluations", r.evaluations},
                 {"pattern", pattern_string(r.best_position, r.algorithm == "greedy" ? 1.0 : o.ub)},
                 {"history", r.history}};
  emit(o, doc.dump(2) + "\n");
  return 0;
}

int cmd_bench(const Options& o) {
  const pecco::BenchConfig cfg = bench_config_of(o);
  const pecco::TableFormat format = o.format == "csv" ? pecco::TableFormat::Csv : pecco::TableFormat::Markdown;
  const pecco::BenchReport report = pecco::run_benchmark(cfg);
  for (const pecco::RunFailure& f : report.failures) {
    std::cerr << "run failed: " << f.algorithm << " repeat " << f.repeat << ": " << f.message << '\n';
  }
  if (o.out) pecco::write_bench_outputs(report, format, *o.out);
  std::cout << pecco::render_tables(report, format);
  return 0;
}

int cmd_oracle(const Options& o) {
  const pecco::BenchConfig cfg = bench_config_of(o);
  const pecco::OffloadingProblem problem(pecco::resolve_scenario(cfg), o.workers);
  const pecco::ExhaustiveResult best = pecco::exhaustive_optimum(problem, o.ub);
  const json doc{{"scenario", problem.scenario().name},
                 {"tasks", problem.task_count()},
                 {"patterns", best.patterns},
                 {"pattern", pattern_string(best.position, o.ub)},
                 {"best_objective", best.breakdown.objective},
                 {"breakdown", breakdown_json(best.breakdown)}};
  emit(o, doc.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Profit and cost-oriented edge-cloud offloading with moth-flame optimizers"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  app.add_option("--scenario", o.scenario, "Scenario file; a synthetic one is generated when omitted");
  app.add_option("--seed", o.seed, "Run seed (bench: base seed; generate: generator seed)");
  app.add_option("--gen-seed", o.gen_seed, "Generator seed used when --scenario is omitted");
  app.add_option("--repeats", o.repeats, "Benchmark repeats")->check(CLI::PositiveNumber);
  app.add_option("--algorithms", o.algorithms, "Comma separated: mfi, mfo, greedy, random")->delimiter(',');
  app.add_option("--moths", o.moths, "Number of moths");
  app.add_option("--iters", o.iters, "Update iterations");
  app.add_option("--lambda", o.lambda, "Profit ratio (negative); overrides the scenario value");
  app.add_option("--ub", o.ub, "Coordinate upper bound");
  app.add_option("--b", o.b, "Spiral shape");
  app.add_option("--tau-threshold", o.tau_threshold, "Lifetime threshold")->check(CLI::Range(0.0, 1.0));
  app.add_option("--elitism", o.elitism, "Keep previous flames in selection (true/false)");
  app.add_option("--format", o.format, "Table format")->check(CLI::IsMember({"csv", "markdown"}));
  app.add_option("--out", o.out, "Output file (generate, run, oracle) or directory (bench)");
  app.add_option("--workers", o.workers, "Threads for fitness evaluation")->check(CLI::PositiveNumber);
  app.add_option("--jobs", o.jobs, "Concurrent benchmark runs")->check(CLI::PositiveNumber);
  app.add_flag("--timing", o.timing, "Record wall-clock time per run in bench.csv");
  app.add_option("--n-cloud", o.generator.n_cloud, "Generator: cloud nodes");
  app.add_option("--n-edge", o.generator.n_edge, "Generator: edge nodes");
  app.add_option("--n-tasks", o.generator.n_tasks, "Generator: tasks");
  app.add_option("--link-density", o.generator.link_density, "Generator: directed link probability");

  auto* generate = app.add_subcommand("generate", "Write a synthetic scenario file");
  auto* run = app.add_subcommand("run", "Run one algorithm and print its breakdown and metrics");
  auto* bench = app.add_subcommand("bench", "Compare algorithms over repeated seeded runs");
  auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum over all side patterns (small K)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) return cmd_generate(o);
    if (*run) return cmd_run(o);
    if (*bench) return cmd_bench(o);
    if (*oracle) return cmd_oracle(o);
  } catch (const pecco::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
