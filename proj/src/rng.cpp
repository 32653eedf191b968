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

#include "qsearch/rng.hpp"

#include <stdexcept>

namespace qsearch {

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{
      static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
      0x5eedu};
  Rng rng(0);
  rng.engine_.seed(seq);
  return rng;
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t Rng::below(std::size_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("Rng::below: bound must be positive");
  }
  const std::uint64_t b = bound;
  const std::uint64_t threshold = (0 - b) % b;
  while (true) {
    const std::uint64_t r = engine_();
    if (r >= threshold) {
      return static_cast<std::size_t>(r % b);
    }
  }
}

std::size_t sample_discrete(std::span<const double> weights, Rng& rng) {
  if (weights.empty()) {
    throw std::invalid_argument("sample_discrete: empty distribution");
  }
  double total = 0;
  for (double w : weights) {
    total += w;
  }
  if (!(total > 0)) {
    throw std::invalid_argument("sample_discrete: weights sum to zero");
  }
  const double u = rng.uniform() * total;
  double cumulative = 0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0) {
      continue;
    }
    cumulative += weights[i];
    last_positive = i;
    if (u < cumulative) {
      return i;
    }
  }
  // Rounding can leave u just above the final cumulative sum.
  return last_positive;
}

}  // namespace qsearch
