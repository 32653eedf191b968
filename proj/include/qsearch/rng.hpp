// Copyright 2026 The qsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

namespace qsearch {

/// Seeded pseudo-random stream. Every draw is derived from the engine's raw
/// 64-bit output with fixed arithmetic, so streams are bit-reproducible
/// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Independent substream for one Monte Carlo trial; a pure function of
  /// (seed, trial) so aggregates do not depend on execution order.
  static Rng for_trial(std::uint64_t seed, std::uint64_t trial);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Uniform integer in [0, bound). bound must be positive.
  std::size_t below(std::size_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Draws an index from a discrete distribution with one uniform variate.
/// The weights need not be normalized; they must be non-negative with a
/// positive sum.
std::size_t sample_discrete(std::span<const double> weights, Rng& rng);

}  // namespace qsearch
