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

#include "qsearch/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qsearch {

Ket apply_oracle(std::size_t j, Ket state) {
  if (j >= state.dim()) {
    throw std::invalid_argument("apply_oracle: index " + std::to_string(j) +
                                " out of range");
  }
  auto amps = std::move(state).release();
  amps[j] = -amps[j];
  return Ket::from_amplitudes(std::move(amps));
}

BlackBox::BlackBox(std::size_t dim, std::size_t hidden_index)
    : dim_(dim), hidden_(hidden_index) {
  if (dim < 1 || hidden_index >= dim) {
    throw std::invalid_argument("BlackBox: hidden index out of range");
  }
}

Ket BlackBox::query(Ket state) {
  if (state.dim() != dim_) {
    throw std::invalid_argument("BlackBox::query: dimension mismatch");
  }
  ++queries_;
  return apply_oracle(hidden_, std::move(state));
}

GroverParams GroverParams::make(std::size_t dim, int iterations) {
  if (dim < 1 || iterations < 0) {
    throw std::invalid_argument("GroverParams: need dim >= 1 and k >= 0");
  }
  return {dim, iterations, std::asin(1.0 / std::sqrt(static_cast<double>(dim)))};
}

double GroverParams::success_probability() const {
  const double s = std::sin((2.0 * iterations + 1.0) * theta);
  return s * s;
}

Ket diffusion(Ket state) {
  qubit_count(state.dim());
  auto amps = std::move(state).release();
  Amplitude mean = 0;
  for (const auto& a : amps) {
    mean += a;
  }
  mean /= static_cast<double>(amps.size());
  for (auto& a : amps) {
    a = 2.0 * mean - a;
  }
  return Ket::from_amplitudes(std::move(amps));
}

Ket uniform_superposition(std::size_t dim) {
  qubit_count(dim);
  std::vector<Amplitude> amps(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
  return Ket::from_amplitudes(std::move(amps));
}

Ket grover_state(BlackBox& box, int iterations) {
  if (iterations < 0) {
    throw std::invalid_argument("grover_state: negative iteration count");
  }
  Ket state = uniform_superposition(box.dim());
  for (int i = 0; i < iterations; ++i) {
    state = diffusion(box.query(std::move(state)));
  }
  return state;
}

std::size_t grover_cycle(BlackBox& box, int iterations, Rng& rng) {
  return sample_index(grover_state(box, iterations), rng);
}

}  // namespace qsearch
