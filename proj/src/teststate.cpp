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

#include "qsearch/teststate.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qsearch {

namespace {

constexpr std::size_t kNotMember = std::numeric_limits<std::size_t>::max();

void require_member(const CandidateSet& set, std::size_t index) {
  if (!set.contains(index)) {
    throw std::invalid_argument("index " + std::to_string(index) +
                                " is not in the candidate set");
  }
}

}  // namespace

CandidateSet::CandidateSet(std::size_t universe_dim,
                           std::vector<std::size_t> members)
    : universe_dim_(universe_dim),
      members_(std::move(members)),
      position_(universe_dim, kNotMember) {
  if (members_.empty()) {
    throw std::invalid_argument("CandidateSet: must have at least one member");
  }
  for (std::size_t p = 0; p < members_.size(); ++p) {
    const std::size_t m = members_[p];
    if (m >= universe_dim_) {
      throw std::invalid_argument("CandidateSet: member out of range");
    }
    if (position_[m] != kNotMember) {
      throw std::invalid_argument("CandidateSet: duplicate member");
    }
    position_[m] = p;
  }
}

CandidateSet CandidateSet::full(std::size_t universe_dim) {
  std::vector<std::size_t> members(universe_dim);
  for (std::size_t i = 0; i < universe_dim; ++i) {
    members[i] = i;
  }
  return CandidateSet(universe_dim, std::move(members));
}

bool CandidateSet::contains(std::size_t index) const {
  return index < universe_dim_ && position_[index] != kNotMember;
}

std::optional<std::size_t> CandidateSet::position_of(std::size_t index) const {
  if (!contains(index)) {
    return std::nullopt;
  }
  return position_[index];
}

CandidateSet CandidateSet::without(std::size_t index) const {
  require_member(*this, index);
  std::vector<std::size_t> rest;
  rest.reserve(members_.size() - 1);
  for (std::size_t m : members_) {
    if (m != index) {
      rest.push_back(m);
    }
  }
  return CandidateSet(universe_dim_, std::move(rest));
}

TestAmplitudes test_amplitudes(std::size_t set_size) {
  if (set_size <= 2) {
    throw std::domain_error(
        "no test states exist for fewer than three candidates: the two "
        "oracles are indistinguishable");
  }
  const double m = static_cast<double>(set_size);
  return {std::sqrt((m - 3) / (2 * m - 4)), std::sqrt(1 / (2 * m - 4)), set_size};
}

SrmCoefficients srm_coefficients(std::size_t set_size) {
  const auto amp = test_amplitudes(set_size);
  const double y = (1 + amp.a) / (static_cast<double>(set_size) - 1);
  return {y, 1 - y};
}

double pyramid_overlap(std::size_t set_size) {
  if (set_size < 3) {
    throw std::domain_error("pyramid_overlap: need at least three candidates");
  }
  const double m = static_cast<double>(set_size);
  return (m - 4) / (m - 2);
}

Ket test_state(const CandidateSet& set, std::size_t privileged) {
  require_member(set, privileged);
  const auto amp = test_amplitudes(set.size());
  std::vector<Amplitude> amps(set.universe_dim());
  for (std::size_t m : set.members()) {
    amps[m] = amp.b;
  }
  amps[privileged] = amp.a;
  return Ket::from_amplitudes(std::move(amps));
}

Ket processed_state(const CandidateSet& set, std::size_t privileged,
                    std::size_t actual) {
  require_member(set, actual);
  auto amps = test_state(set, privileged).release();
  amps[actual] = -amps[actual];
  return Ket::from_amplitudes(std::move(amps));
}

std::vector<Ket> srm_basis(const CandidateSet& set, std::size_t privileged) {
  require_member(set, privileged);
  if (set.size() <= 3) {
    throw std::domain_error(
        "square-root measurement unavailable for three or fewer candidates");
  }
  const auto amp = test_amplitudes(set.size());
  const auto xy = srm_coefficients(set.size());
  std::vector<Ket> basis;
  basis.reserve(set.size());
  for (std::size_t k : set.members()) {
    if (k == privileged) {
      basis.push_back(processed_state(set, privileged, privileged));
      continue;
    }
    std::vector<Amplitude> amps(set.universe_dim());
    for (std::size_t l : set.members()) {
      amps[l] = xy.y;
    }
    amps[privileged] = amp.b;
    amps[k] = -xy.x;
    basis.push_back(Ket::from_amplitudes(std::move(amps)));
  }
  return basis;
}

}  // namespace qsearch
