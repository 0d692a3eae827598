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
#include <concepts>
#include <cstdint>
#include <random>

namespace pecco {

/// Seeded random stream used by every stochastic component.
///
/// Wraps std::mt19937_64 (whose output sequence is fixed by the standard) and
/// derives uniforms with explicit bit arithmetic instead of the
/// implementation-defined std::*_distribution types, so a seed reproduces the
/// same trajectory on every toolchain.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform index in [0, n). Rejection sampling keeps it unbiased.
  std::size_t index(std::size_t n) {
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return static_cast<std::size_t>(x % bound);
  }

  std::uint64_t next_u64() { return engine_(); }

private:
  std::mt19937_64 engine_;
};

/// Anything that can stand in for Rng where only uniforms and indices are
/// drawn (tests script these streams).
template <typename G>
concept UniformSource = requires(G g, std::size_t n) {
  { g.uniform01() } -> std::convertible_to<double>;
  { g.index(n) } -> std::convertible_to<std::size_t>;
};

}  // namespace pecco
