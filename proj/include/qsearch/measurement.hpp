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

#include <Eigen/Dense>
#include <cstddef>
#include <string>
#include <vector>

#include "qsearch/rng.hpp"
#include "qsearch/statevector.hpp"
#include "qsearch/teststate.hpp"

namespace qsearch {

enum class OutcomeKind {
  kYes,           // processed state matched the privileged test state
  kPointsTo,      // "no", with `index` as the suggested next guess
  kInconclusive,  // "no", without usable information (MUD failure)
  kNo,            // bare "no" of a classical membership test
};

struct PomOutcome {
  OutcomeKind kind;
  std::size_t index = 0;

  static PomOutcome yes(std::size_t j) { return {OutcomeKind::kYes, j}; }
  static PomOutcome points_to(std::size_t k) { return {OutcomeKind::kPointsTo, k}; }
  static PomOutcome inconclusive() { return {OutcomeKind::kInconclusive, 0}; }
  static PomOutcome no() { return {OutcomeKind::kNo, 0}; }

  std::string label() const;
  friend bool operator==(const PomOutcome&, const PomOutcome&) = default;
};

/// Conditional SRM probabilities for a wrong guess with L "no" outcomes:
/// alpha = P(pointer is the actual oracle), beta = P(pointer is one specific
/// other index). alpha + (L-1) beta = 1.
struct ConditionalProbabilities {
  double alpha;
  double beta;
};

/// Requires L >= 3.
ConditionalProbabilities alpha_beta(std::size_t no_outcomes);

/// Square-root measurement for the test state of `privileged` on a candidate
/// set. Outcome amplitudes are evaluated from the closed-form kets in O(N)
/// without materializing the basis.
class Srm {
 public:
  Srm(CandidateSet set, std::size_t privileged);

  const CandidateSet& set() const { return set_; }
  std::size_t privileged() const { return privileged_; }

  /// |<T_j^k|state>|^2 ordered like the set's members. Throws
  /// std::invalid_argument if more than 1e-8 of the norm lies outside the
  /// measured subspace.
  std::vector<double> outcome_probabilities(const Ket& state) const;

  /// Materialized basis kets (same as srm_basis).
  std::vector<Ket> basis() const { return srm_basis(set_, privileged_); }

 private:
  CandidateSet set_;
  std::size_t privileged_;
  double a_, b_, x_, y_;
};

/// Samples the SRM: the privileged outcome is reported as "yes", any other
/// outcome k as "points-to k".
PomOutcome srm_measure(const Ket& state, const Srm& srm, Rng& rng);

/// Measurement for unambiguous discrimination of the "no" pyramid
/// {O^k |t_j> : k in set, k != j}. Conclusive element k is
/// (1 - lambda) |d_k><d_k| with d_k the reciprocal (dual) ket of edge k, so
/// every edge is identified with probability 1 - lambda = 2/(M-2) and never
/// misidentified. The inconclusive element completes the identity on the
/// pyramid's span.
class MudPom {
 public:
  MudPom(CandidateSet set, std::size_t privileged);

  const CandidateSet& set() const { return set_; }
  std::size_t privileged() const { return privileged_; }
  double overlap() const { return lambda_; }
  double conclusive_probability() const { return 1 - lambda_; }

  /// <state|E_k|state> ordered like the set's members (0 at the privileged
  /// position). Throws on leakage out of the pyramid span beyond 1e-8.
  std::vector<double> conclusive_probabilities(const Ket& state) const;

  /// Dense forms, for verification.
  Eigen::VectorXcd reciprocal_ket(std::size_t k) const;
  Eigen::MatrixXcd conclusive_element(std::size_t k) const;
  Eigen::MatrixXcd inconclusive_element() const;

 private:
  CandidateSet set_;
  std::size_t privileged_;
  double a_, b_, lambda_;
};

/// Requires M >= 5 (for M = 4 the edges are already orthogonal).
MudPom build_mud(const CandidateSet& set, std::size_t privileged);

/// "points-to k" with probability <state|E_k|state>, else "inconclusive".
PomOutcome mud_measure(const Ket& state, const MudPom& pom, Rng& rng);

/// |<t_j^j|state>|^2: the "yes" probability of the two-outcome test that
/// precedes the MUD.
double yes_probability(const CandidateSet& set, std::size_t privileged,
                       const Ket& state);

/// Two-outcome yes/no measurement followed, on "no", by the MUD applied to
/// the post-measurement state.
PomOutcome test_then_mud(const Ket& state, const MudPom& pom, Rng& rng);

}  // namespace qsearch
