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
#include <optional>
#include <span>
#include <vector>

#include "qsearch/statevector.hpp"

namespace qsearch {

/// Ordered set of still-viable oracle indices inside a universe of size N.
/// Member order fixes the mapping between measurement outcomes and indices.
class CandidateSet {
 public:
  CandidateSet(std::size_t universe_dim, std::vector<std::size_t> members);

  /// {0, 1, ..., N-1}.
  static CandidateSet full(std::size_t universe_dim);

  std::size_t universe_dim() const { return universe_dim_; }
  std::size_t size() const { return members_.size(); }
  std::span<const std::size_t> members() const { return members_; }
  std::size_t operator[](std::size_t position) const { return members_[position]; }

  bool contains(std::size_t index) const;
  std::optional<std::size_t> position_of(std::size_t index) const;

  /// Copy with `index` removed; throws if it is not a member or if the set
  /// would become empty.
  CandidateSet without(std::size_t index) const;

 private:
  std::size_t universe_dim_;
  std::vector<std::size_t> members_;
  std::vector<std::size_t> position_;  // universe index -> position, or npos
};

/// Real amplitudes of a test state over M candidates:
/// a = sqrt((M-3)/(2M-4)) on the privileged ket, b = sqrt(1/(2M-4)) elsewhere.
struct TestAmplitudes {
  double a;
  double b;
  std::size_t set_size;
};

/// Throws std::domain_error for M <= 2, where no test states exist.
TestAmplitudes test_amplitudes(std::size_t set_size);

/// y = (1 + a)/(M - 1), x = 1 - y.
struct SrmCoefficients {
  double y;
  double x;
};

SrmCoefficients srm_coefficients(std::size_t set_size);

/// Pairwise overlap of the "no" states, (M-4)/(M-2).
double pyramid_overlap(std::size_t set_size);

/// a|j> + b sum_{l in set, l != j} |l>, embedded in the universe.
Ket test_state(const CandidateSet& set, std::size_t privileged);

/// O^actual applied to the test state for `privileged`.
Ket processed_state(const CandidateSet& set, std::size_t privileged,
                    std::size_t actual);

/// Orthonormal square-root-measurement kets T_j^k, ordered like the set's
/// members. Requires M >= 4.
std::vector<Ket> srm_basis(const CandidateSet& set, std::size_t privileged);

}  // namespace qsearch
