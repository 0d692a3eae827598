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
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pecco/baselines.hpp"
#include "pecco/mfi.hpp"
#include "pecco/mfo.hpp"
#include "pecco/parallel.hpp"
#include "pecco/report.hpp"
#include "pecco/scenario_io.hpp"

namespace pecco {

inline const std::vector<std::string>& known_algorithms() {
  static const std::vector<std::string> names{"mfi", "mfo", "greedy", "random"};
  return names;
}

/// Runs one named algorithm. MFO and random search read the MfoParams part of
/// `params`; greedy ignores them.
inline RunReport run_algorithm(std::string_view name, const OffloadingProblem& problem, const MfiParams& params) {
  if (name == "mfi") return run_pecco_mfi(problem, params);
  if (name == "mfo") return run_mfo(problem, static_cast<const MfoParams&>(params));
  if (name == "greedy") return run_greedy(problem);
  if (name == "random") return run_random_search(problem, static_cast<const MfoParams&>(params));
  throw Error("unknown algorithm '" + std::string(name) + "' (expected mfi, mfo, greedy or random)");
}

enum class TableFormat { Csv, Markdown };

struct BenchConfig {
  std::optional<std::string> scenario_path;  // generated from `generator` when empty
  GeneratorConfig generator{};
  std::uint64_t generator_seed = 1;
  std::optional<double> lambda;  // overrides the scenario's lambda
  std::vector<std::string> algorithms{"mfi", "mfo"};
  std::size_t repeats = 10;
  std::uint64_t base_seed = 1;
  MfiParams params{};
  std::size_t jobs = 1;        // concurrent (algorithm, repeat) runs
  bool record_timing = false;  // wall_ms stays 0 unless set, keeping output reproducible

  void validate() const {
    if (repeats < 1) throw Error("repeats must be at least 1");
    if (algorithms.empty()) throw Error("at least one algorithm is required");
    for (std::size_t a = 0; a < algorithms.size(); ++a) {
      const auto& names = known_algorithms();
      if (std::find(names.begin(), names.end(), algorithms[a]) == names.end()) {
        throw Error("unknown algorithm '" + algorithms[a] + "' (expected mfi, mfo, greedy or random)");
      }
      if (std::find(algorithms.begin(), algorithms.begin() + static_cast<std::ptrdiff_t>(a), algorithms[a]) !=
          algorithms.begin() + static_cast<std::ptrdiff_t>(a)) {
        throw Error("algorithm '" + algorithms[a] + "' listed twice");
      }
    }
    params.validate();
  }
};

struct RunRow {
  std::string algorithm;
  std::size_t repeat = 0;
  RunReport report;
  double wall_ms = 0.0;
};

struct RunFailure {
  std::string algorithm;
  std::size_t repeat = 0;
  std::string message;
};

struct AlgorithmSummary {
  std::string algorithm;
  std::size_t runs = 0;
  MetricsReport mean;
  MetricsReport stddev;  // sample standard deviation; 0 for a single run
  bool overloaded = false;
  bool zero_denominator = false;
};

struct BenchReport {
  std::string scenario_name;
  std::vector<RunRow> rows;  // by (algorithm position in config, repeat)
  std::vector<AlgorithmSummary> summaries;
  std::vector<RunFailure> failures;
};

namespace detail {

inline constexpr double MetricsReport::* kMetricFields[] = {
    &MetricsReport::objective,           &MetricsReport::profit,
    &MetricsReport::cost,                &MetricsReport::profit_cost_ratio,
    &MetricsReport::allocated_count,     &MetricsReport::profit_per_allocation,
    &MetricsReport::cost_per_allocation, &MetricsReport::utilization_percent,
    &MetricsReport::profit_per_utilization, &MetricsReport::cost_per_utilization,
};

/// Mean and sample deviation, summing rows in ascending repeat order.
inline AlgorithmSummary summarize(const std::string& algorithm, const std::vector<const RunRow*>& rows) {
  AlgorithmSummary s;
  s.algorithm = algorithm;
  s.runs = rows.size();
  if (rows.empty()) return s;
  const double n = static_cast<double>(rows.size());
  for (auto field : kMetricFields) {
    double sum = 0.0;
    for (const RunRow* r : rows) sum += r->report.metrics.*field;
    const double mean = sum / n;
    double sq = 0.0;
    for (const RunRow* r : rows) {
      const double d = r->report.metrics.*field - mean;
      sq += d * d;
    }
    s.mean.*field = mean;
    s.stddev.*field = rows.size() > 1 ? std::sqrt(sq / (n - 1.0)) : 0.0;
  }
  for (const RunRow* r : rows) {
    s.overloaded = s.overloaded || r->report.overloaded;
    s.zero_denominator = s.zero_denominator || r->report.metrics.zero_denominator;
  }
  return s;
}

inline std::string fixed2(double v) {
  if (std::abs(v) < 0.005) v = 0.0;  // avoid "-0.00"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string exact(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

inline Scenario resolve_scenario(const BenchConfig& cfg) {
  Scenario s = cfg.scenario_path ? read_scenario_file(*cfg.scenario_path)
                                 : generate_scenario(cfg.generator, cfg.generator_seed);
  if (cfg.lambda) {
    if (!(*cfg.lambda < 0.0)) throw Error("lambda must be negative");
    s.lambda = *cfg.lambda;
  }
  return s;
}

/// Runs every algorithm `repeats` times on one scenario. Repeat r uses seed
/// base_seed + r for every algorithm, so comparisons are paired and the
/// algorithm list order never changes an individual run.
inline BenchReport run_benchmark(const BenchConfig& cfg) {
  cfg.validate();
  const OffloadingProblem problem(resolve_scenario(cfg), cfg.params.workers);

  struct Slot {
    std::optional<RunRow> row;
    std::optional<RunFailure> failure;
  };
  const std::size_t n_alg = cfg.algorithms.size();
  std::vector<Slot> slots(n_alg * cfg.repeats);
  detail::parallel_for(slots.size(), cfg.jobs, [&](std::size_t idx) {
    const std::string& alg = cfg.algorithms[idx / cfg.repeats];
    const std::size_t repeat = idx % cfg.repeats;
    MfiParams params = cfg.params;
    params.seed = cfg.base_seed + repeat;
    try {
      const auto start = std::chrono::steady_clock::now();
      RunReport report = run_algorithm(alg, problem, params);
      const auto stop = std::chrono::steady_clock::now();
      const double ms =
          cfg.record_timing ? std::chrono::duration<double, std::milli>(stop - start).count() : 0.0;
      slots[idx].row = RunRow{alg, repeat, std::move(report), ms};
    } catch (const std::exception& e) {
      slots[idx].failure = RunFailure{alg, repeat, e.what()};
    }
  });

  BenchReport out;
  out.scenario_name = problem.scenario().name;
  for (Slot& slot : slots) {
    if (slot.row) out.rows.push_back(std::move(*slot.row));
    if (slot.failure) out.failures.push_back(std::move(*slot.failure));
  }
  for (const std::string& alg : cfg.algorithms) {
    std::vector<const RunRow*> rows;
    for (const RunRow& r : out.rows) {
      if (r.algorithm == alg) rows.push_back(&r);
    }
    out.summaries.push_back(detail::summarize(alg, rows));
  }
  return out;
}

/// Raw per-run rows, full precision.
inline std::string bench_csv(const BenchReport& report) {
  std::ostringstream os;
  os << "algorithm,repeat,objective,profit,cost,profit_cost_ratio,allocated,profit_per_alloc,cost_per_alloc,"
        "utilization_pct,profit_per_util,cost_per_util,overloaded,wall_ms\n";
  for (const RunRow& r : report.rows) {
    const MetricsReport& m = r.report.metrics;
    os << r.algorithm << ',' << r.repeat;
    for (auto field : detail::kMetricFields) os << ',' << detail::exact(m.*field);
    os << ',' << (r.report.overloaded ? 1 : 0) << ',' << detail::exact(r.wall_ms) << '\n';
  }
  return os.str();
}

inline std::string convergence_csv(const RunReport& run) {
  std::ostringstream os;
  os << "iteration,best_objective\n";
  for (std::size_t i = 0; i < run.history.size(); ++i) os << (i + 1) << ',' << detail::exact(run.history[i]) << '\n';
  return os.str();
}

/// The three comparison tables (objective/profit/cost, allocation,
/// utilisation) with one column per algorithm, values as 10-run style means.
/// Overloaded utilisation cells are parenthesized.
inline std::string render_tables(const BenchReport& report, TableFormat format) {
  struct Row {
    const char* label;
    const char* column;
    double MetricsReport::* field;
    bool percent;
  };
  struct Table {
    const char* title;
    const char* key;
    std::vector<Row> rows;
  };
  const std::vector<Table> tables{
      {"Objective, profit and cost",
       "objective_profit_cost",
       {{"Overall Objective", "objective", &MetricsReport::objective, false},
        {"Profit", "profit", &MetricsReport::profit, false},
        {"Cost", "cost", &MetricsReport::cost, false},
        {"Profit/Cost Ratio", "profit_cost_ratio", &MetricsReport::profit_cost_ratio, false}}},
      {"Task allocation",
       "allocation",
       {{"#Allocation", "allocated", &MetricsReport::allocated_count, false},
        {"Profit/Allocation Ratio", "profit_per_alloc", &MetricsReport::profit_per_allocation, false},
        {"Cost/Allocation Ratio", "cost_per_alloc", &MetricsReport::cost_per_allocation, false}}},
      {"Resource utilisation",
       "utilization",
       {{"Utilisation", "utilization_pct", &MetricsReport::utilization_percent, true},
        {"Profit/Utilisation Ratio", "profit_per_util", &MetricsReport::profit_per_utilization, false},
        {"Cost/Utilisation Ratio", "cost_per_util", &MetricsReport::cost_per_utilization, false}}},
  };

  auto cell = [](const AlgorithmSummary& s, const Row& row) {
    std::string text = detail::fixed2(s.mean.*row.field);
    if (row.percent) text += "%";
    if (row.percent && s.overloaded) text = "(" + text + ")";
    return text;
  };

  std::ostringstream os;
  if (format == TableFormat::Csv) {
    static const char* columns[] = {"objective",      "profit",          "cost",          "profit_cost_ratio",
                                    "allocated",      "profit_per_alloc", "cost_per_alloc", "utilization_pct",
                                    "profit_per_util", "cost_per_util"};
    os << "algorithm,metric_set";
    for (const char* c : columns) os << ',' << c;
    os << '\n';
    for (const AlgorithmSummary& s : report.summaries) {
      for (const Table& t : tables) {
        os << s.algorithm << ',' << t.key;
        for (const char* c : columns) {
          os << ',';
          for (const Row& row : t.rows) {
            if (std::string_view(row.column) == c) os << cell(s, row);
          }
        }
        os << '\n';
      }
    }
    return os.str();
  }

  bool any_zero = false;
  for (const Table& t : tables) {
    os << "### " << t.title << "\n\n| Value \\ Method |";
    for (const AlgorithmSummary& s : report.summaries) {
      os << ' ' << s.algorithm << (s.zero_denominator ? "*" : "") << " |";
      any_zero = any_zero || s.zero_denominator;
    }
    os << "\n|---|";
    for (std::size_t i = 0; i < report.summaries.size(); ++i) os << "---:|";
    os << '\n';
    for (const Row& row : t.rows) {
      os << "| " << row.label << " |";
      for (const AlgorithmSummary& s : report.summaries) os << ' ' << cell(s, row) << " |";
      os << '\n';
    }
    os << '\n';
  }
  os << "Means over repeats. Parenthesized utilisation: at least one run overloaded a node.\n";
  if (any_zero) os << "* at least one run had a ratio with a zero denominator, counted as 0.\n";
  return os.str();
}

/// Writes bench.csv, tables.{csv,md} and convergence_<alg>_<repeat>.csv into
/// `dir`, creating it if needed.
inline void write_bench_outputs(const BenchReport& report, TableFormat format, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto write = [](const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw Error("cannot write '" + p.string() + "'");
    out << text;
  };
  write(dir / "bench.csv", bench_csv(report));
  write(dir / (format == TableFormat::Csv ? "tables.csv" : "tables.md"), render_tables(report, format));
  for (const RunRow& r : report.rows) {
    write(dir / ("convergence_" + r.algorithm + "_" + std::to_string(r.repeat) + ".csv"), convergence_csv(r.report));
  }
}

}  // namespace pecco
