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
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pecco/objective.hpp"
#include "pecco/parallel.hpp"
#include "pecco/report.hpp"
#include "pecco/rng.hpp"

namespace pecco {

struct MfoParams {
  std::size_t nsa = 30;        // moth count
  std::size_t max_iter = 100;  // update iterations after initialization
  double b = 1.0;              // spiral shape
  double ub = 1.0;             // coordinates live in [0, ub]
  bool elitism = true;         // flames = best of (previous flames + moths)
  std::uint64_t seed = 0;
  std::size_t workers = 1;     // threads for fitness evaluation

  void validate() const {
    if (nsa < 2) throw Error("nsa must be at least 2");
    if (max_iter < 1) throw Error("max_iter must be at least 1");
    if (!(ub > 0.0) || !std::isfinite(ub)) throw Error("ub must be positive");
    if (!std::isfinite(b)) throw Error("b must be finite");
  }
};

struct SwarmState {
  std::vector<Position> moths;
  std::vector<double> moth_fitness;  // objective values; lower is fitter
  std::vector<Position> flames;      // best first
  std::vector<double> flame_fitness;
  std::size_t iteration = 0;
};

/// Draws exactly K uniforms in coordinate order: x_j = ub * u_j.
template <UniformSource G>
Position random_position(std::size_t dims, double ub, G& rng) {
  Position p(dims);
  for (double& x : p) x = ub * rng.uniform01();
  return p;
}

/// Surviving flame count at iteration `ci` of `mi`, rounded half away from
/// zero; decreases from n to exactly 1 at ci == mi.
inline std::size_t flame_count(std::size_t n, std::size_t ci, std::size_t mi) {
  const double k = std::round(static_cast<double>(n) -
                              static_cast<double>(ci) * static_cast<double>(n - 1) / static_cast<double>(mi));
  return static_cast<std::size_t>(std::clamp(k, 1.0, static_cast<double>(n)));
}

/// Logarithmic spiral flight of `moth` around `target`, one t per coordinate,
/// clamped to [0, ub].
inline Position spiral_step(std::span<const double> moth, std::span<const double> target, double b,
                            std::span<const double> t, double ub) {
  Position out(moth.size());
  for (std::size_t j = 0; j < moth.size(); ++j) {
    const double distance = std::abs(target[j] - moth[j]);
    const double x = distance * std::exp(b * t[j]) * std::cos(2.0 * std::numbers::pi * t[j]) + target[j];
    out[j] = std::clamp(x, 0.0, ub);
  }
  return out;
}

/// 1-based flame index that moth `i` chases when `k` flames survive.
inline std::size_t mfo_pair(std::size_t i, std::size_t k) { return i <= k ? i : k; }

/// Lower end of the spiral parameter range; linear from -1 to -2.
inline double spiral_lower_bound(std::size_t ci, std::size_t mi) {
  if (mi <= 1) return -1.0;
  return -1.0 - static_cast<double>(ci - 1) / static_cast<double>(mi - 1);
}

namespace detail {

/// Shared moth-flame loop. `pursuit(i, state, rng)` returns the position
/// moth i (0-based) flies around this iteration.
///
/// Per iteration: evaluate all moths (possibly in parallel), select k flames,
/// then for each moth in ascending index: pursuit draws, followed by K
/// spiral draws t ~ U[r, 1].
template <typename Pursuit>
RunReport run_swarm(const OffloadingProblem& problem, const MfoParams& params, std::vector<Position> moths,
                    Rng& rng, std::string algorithm, Pursuit&& pursuit) {
  const std::size_t n = params.nsa;
  const std::size_t dims = problem.task_count();
  SwarmState state;
  state.moths = std::move(moths);
  state.moth_fitness.assign(n, 0.0);

  RunReport report;
  report.history.reserve(params.max_iter);
  std::vector<std::size_t> order;
  std::vector<double> t(dims);

  for (std::size_t ci = 1; ci <= params.max_iter; ++ci) {
    state.iteration = ci;
    parallel_for(n, params.workers,
                 [&](std::size_t i) { state.moth_fitness[i] = problem.evaluate(state.moths[i], params.ub).objective; });
    report.evaluations += n;

    // Candidate pool: previous flames first, then moths; stable sort keeps
    // that order among equal objectives.
    std::vector<Position> pool_pos;
    std::vector<double> pool_fit;
    if (params.elitism && ci > 1) {
      pool_pos = std::move(state.flames);
      pool_fit = std::move(state.flame_fitness);
    }
    pool_pos.insert(pool_pos.end(), state.moths.begin(), state.moths.end());
    pool_fit.insert(pool_fit.end(), state.moth_fitness.begin(), state.moth_fitness.end());
    order.resize(pool_pos.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pool_fit[a] < pool_fit[b]; });

    const std::size_t k = flame_count(n, ci, params.max_iter);
    state.flames.clear();
    state.flame_fitness.clear();
    for (std::size_t f = 0; f < k && f < order.size(); ++f) {
      state.flames.push_back(std::move(pool_pos[order[f]]));
      state.flame_fitness.push_back(pool_fit[order[f]]);
    }
    report.history.push_back(state.flame_fitness.front());

    const double r = spiral_lower_bound(ci, params.max_iter);
    for (std::size_t i = 0; i < n; ++i) {
      const Position target = pursuit(i, state, rng);
      for (double& tj : t) tj = r + (1.0 - r) * rng.uniform01();
      state.moths[i] = spiral_step(state.moths[i], target, params.b, t, params.ub);
    }
  }

  RunReport out = make_report(problem, std::move(algorithm), params.seed, state.flames.front(),
                              problem.decode(state.flames.front(), params.ub));
  out.history = std::move(report.history);
  out.evaluations = report.evaluations;
  return out;
}

}  // namespace detail

/// Original moth-flame optimizer. Moths start uniformly at random unless
/// `initial` is given (nsa rows of K coordinates).
inline RunReport run_mfo(const OffloadingProblem& problem, const MfoParams& params,
                         std::optional<std::vector<Position>> initial = std::nullopt) {
  params.validate();
  const std::size_t dims = problem.task_count();
  Rng rng(params.seed);
  std::vector<Position> moths;
  if (initial) {
    if (initial->size() != params.nsa) throw Error("initial positions: expected nsa rows");
    for (const Position& p : *initial) {
      if (p.size() != dims) throw Error("initial positions: expected K coordinates per row");
    }
    moths = std::move(*initial);
  } else {
    moths.reserve(params.nsa);
    for (std::size_t i = 0; i < params.nsa; ++i) moths.push_back(random_position(dims, params.ub, rng));
  }
  return detail::run_swarm(problem, params, std::move(moths), rng, "mfo",
                           [](std::size_t i, const SwarmState& s, Rng&) -> Position {
                             return s.flames[mfo_pair(i + 1, s.flames.size()) - 1];
                           });
}

}  // namespace pecco
