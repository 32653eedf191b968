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

#include "qsearch/rng.hpp"
#include "qsearch/statevector.hpp"

namespace qsearch {

/// O^j = I - 2|j><j|: negates the amplitude of index ket j.
Ket apply_oracle(std::size_t j, Ket state);

/// A hidden oracle index behind a query interface. Strategies see only the
/// dimension and the query counter.
class BlackBox {
 public:
  BlackBox(std::size_t dim, std::size_t hidden_index);

  /// Applies O^hidden and advances the counter by one.
  Ket query(Ket state);

  std::size_t dim() const { return dim_; }
  std::uint64_t queries() const { return queries_; }

  /// For test assertions and transcript checks only.
  std::size_t reveal_for_testing() const { return hidden_; }

 private:
  std::size_t dim_;
  std::size_t hidden_;
  std::uint64_t queries_ = 0;
};

/// Grover iteration parameters; sin(theta) = 1/sqrt(dim).
struct GroverParams {
  std::size_t dim;
  int iterations;
  double theta;

  static GroverParams make(std::size_t dim, int iterations);
  /// sin((2k+1) theta)^2.
  double success_probability() const;
};

/// Inversion about the average, c_i -> 2 mean(c) - c_i; equals
/// -H^n (I - 2|0><0|) H^n. Requires a power-of-two dimension.
Ket diffusion(Ket state);

/// H^n |0...0>.
Ket uniform_superposition(std::size_t dim);

/// Uniform start followed by k applications of D O, spending k queries.
Ket grover_state(BlackBox& box, int iterations);

/// One Grover cycle: grover_state then a computational-basis measurement.
std::size_t grover_cycle(BlackBox& box, int iterations, Rng& rng);

}  // namespace qsearch
