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

#include "qsearch/measurement.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qsearch {

namespace {

constexpr double kLeakageTolerance = 1e-8;

// Sum of the state's amplitudes over the candidate set.
Amplitude set_sum(const CandidateSet& set, const Ket& state) {
  Amplitude total = 0;
  for (std::size_t m : set.members()) {
    total += state[m];
  }
  return total;
}

void check_dims(const CandidateSet& set, const Ket& state) {
  if (state.dim() != set.universe_dim()) {
    throw std::invalid_argument("state dimension does not match the universe");
  }
}

PomOutcome sample_pointer(const CandidateSet& set, std::size_t privileged,
                          const std::vector<double>& probs, Rng& rng) {
  const std::size_t k = set[sample_discrete(probs, rng)];
  return k == privileged ? PomOutcome::yes(k) : PomOutcome::points_to(k);
}

}  // namespace

std::string PomOutcome::label() const {
  switch (kind) {
    case OutcomeKind::kYes:
      return "yes";
    case OutcomeKind::kPointsTo:
      return "points-to " + std::to_string(index);
    case OutcomeKind::kInconclusive:
      return "inconclusive";
    case OutcomeKind::kNo:
      return "no";
  }
  return "?";
}

ConditionalProbabilities alpha_beta(std::size_t no_outcomes) {
  if (no_outcomes < 3) {
    throw std::domain_error("alpha_beta: need at least three \"no\" outcomes");
  }
  const double l = static_cast<double>(no_outcomes);
  const double m = l + 1;
  const double beta_root = std::sqrt(m - 3) - std::sqrt(2.0) / std::sqrt(m - 2);
  const double alpha_root = std::sqrt(m - 3) + std::sqrt(2 * m - 4);
  return {alpha_root * alpha_root / (l * l), beta_root * beta_root / (l * l)};
}

Srm::Srm(CandidateSet set, std::size_t privileged)
    : set_(std::move(set)), privileged_(privileged) {
  if (!set_.contains(privileged_)) {
    throw std::invalid_argument("Srm: privileged index not in the set");
  }
  if (set_.size() <= 3) {
    throw std::domain_error(
        "square-root measurement unavailable for three or fewer candidates");
  }
  const auto amp = test_amplitudes(set_.size());
  const auto xy = srm_coefficients(set_.size());
  a_ = amp.a;
  b_ = amp.b;
  x_ = xy.x;
  y_ = xy.y;
}

std::vector<double> Srm::outcome_probabilities(const Ket& state) const {
  check_dims(set_, state);
  const Amplitude sum = set_sum(set_, state);
  const Amplitude pj = state[privileged_];
  std::vector<double> probs(set_.size());
  double captured = 0;
  for (std::size_t p = 0; p < set_.size(); ++p) {
    const std::size_t k = set_[p];
    Amplitude amp;
    if (k == privileged_) {
      amp = -a_ * pj + b_ * (sum - pj);
    } else {
      const Amplitude pk = state[k];
      amp = b_ * pj - x_ * pk + y_ * (sum - pj - pk);
    }
    probs[p] = std::norm(amp);
    captured += probs[p];
  }
  if (state.norm_squared() - captured > kLeakageTolerance) {
    throw std::invalid_argument("Srm: state leaks out of the measured subspace");
  }
  return probs;
}

PomOutcome srm_measure(const Ket& state, const Srm& srm, Rng& rng) {
  return sample_pointer(srm.set(), srm.privileged(),
                        srm.outcome_probabilities(state), rng);
}

MudPom::MudPom(CandidateSet set, std::size_t privileged)
    : set_(std::move(set)), privileged_(privileged) {
  if (!set_.contains(privileged_)) {
    throw std::invalid_argument("MudPom: privileged index not in the set");
  }
  if (set_.size() < 5) {
    throw std::domain_error(
        "MUD needs at least five candidates; smaller pyramids are not acute");
  }
  const auto amp = test_amplitudes(set_.size());
  a_ = amp.a;
  b_ = amp.b;
  lambda_ = pyramid_overlap(set_.size());
}

std::vector<double> MudPom::conclusive_probabilities(const Ket& state) const {
  check_dims(set_, state);
  const Amplitude sum = set_sum(set_, state);
  const Amplitude pj = state[privileged_];
  // <t_j|state> and <t_j^j|state>; the test state is real.
  const Amplitude test_overlap = a_ * pj + b_ * (sum - pj);
  const Amplitude yes_overlap = test_overlap - 2 * a_ * pj;
  double in_set = 0;
  for (std::size_t m : set_.members()) {
    in_set += std::norm(state[m]);
  }
  const double leakage =
      state.norm_squared() - in_set + std::norm(yes_overlap);
  if (leakage > kLeakageTolerance) {
    throw std::invalid_argument("MudPom: state leaks out of the pyramid span");
  }
  // Edge overlaps c_l = <t_j^l|state> = <t_j|state> - 2b state_l, and the
  // reciprocal kets through the inverse Gram matrix
  // G^-1 = (I - lambda/(1 - lambda + L lambda) J)/(1 - lambda).
  const double edges = static_cast<double>(set_.size() - 1);
  const Amplitude edge_sum = edges * test_overlap - 2 * b_ * (sum - pj);
  const double shrink = lambda_ / (1 - lambda_ + edges * lambda_);
  std::vector<double> probs(set_.size());
  for (std::size_t p = 0; p < set_.size(); ++p) {
    const std::size_t k = set_[p];
    if (k == privileged_) {
      continue;
    }
    const Amplitude edge = test_overlap - 2 * b_ * state[k];
    const Amplitude dual = (edge - shrink * edge_sum) / (1 - lambda_);
    probs[p] = (1 - lambda_) * std::norm(dual);
  }
  return probs;
}

Eigen::VectorXcd MudPom::reciprocal_ket(std::size_t k) const {
  if (k == privileged_ || !set_.contains(k)) {
    throw std::invalid_argument("reciprocal_ket: not a pyramid edge");
  }
  const double edges = static_cast<double>(set_.size() - 1);
  const double shrink = lambda_ / (1 - lambda_ + edges * lambda_);
  Eigen::VectorXcd dual = Eigen::VectorXcd::Zero(set_.universe_dim());
  for (std::size_t l : set_.members()) {
    if (l == privileged_) {
      continue;
    }
    const double weight = ((l == k ? 1.0 : 0.0) - shrink) / (1 - lambda_);
    const Ket edge = processed_state(set_, privileged_, l);
    for (std::size_t i = 0; i < edge.dim(); ++i) {
      dual[i] += weight * edge[i];
    }
  }
  return dual;
}

Eigen::MatrixXcd MudPom::conclusive_element(std::size_t k) const {
  const Eigen::VectorXcd dual = reciprocal_ket(k);
  return (1 - lambda_) * dual * dual.adjoint();
}

Eigen::MatrixXcd MudPom::inconclusive_element() const {
  const auto n = static_cast<Eigen::Index>(set_.universe_dim());
  Eigen::MatrixXcd span = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t m : set_.members()) {
    span(m, m) = 1;
  }
  const Ket yes = processed_state(set_, privileged_, privileged_);
  Eigen::VectorXcd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    y[i] = yes[i];
  }
  span -= y * y.adjoint();
  for (std::size_t k : set_.members()) {
    if (k != privileged_) {
      span -= conclusive_element(k);
    }
  }
  return span;
}

MudPom build_mud(const CandidateSet& set, std::size_t privileged) {
  return MudPom(set, privileged);
}

PomOutcome mud_measure(const Ket& state, const MudPom& pom, Rng& rng) {
  auto probs = pom.conclusive_probabilities(state);
  double conclusive = 0;
  for (double p : probs) {
    conclusive += p;
  }
  probs.push_back(std::max(0.0, state.norm_squared() - conclusive));
  const std::size_t pick = sample_discrete(probs, rng);
  if (pick == pom.set().size()) {
    return PomOutcome::inconclusive();
  }
  return PomOutcome::points_to(pom.set()[pick]);
}

double yes_probability(const CandidateSet& set, std::size_t privileged,
                       const Ket& state) {
  return fidelity(processed_state(set, privileged, privileged), state);
}

PomOutcome test_then_mud(const Ket& state, const MudPom& pom, Rng& rng) {
  const Ket yes = processed_state(pom.set(), pom.privileged(), pom.privileged());
  const Amplitude overlap = inner(yes, state);
  const double p_yes = std::norm(overlap);
  const double u = rng.uniform();
  if (u < p_yes || p_yes > 1 - kTolerance) {
    return PomOutcome::yes(pom.privileged());
  }
  if (p_yes == 0) {
    return mud_measure(state, pom, rng);
  }
  std::vector<Amplitude> rest(state.amplitudes().begin(), state.amplitudes().end());
  for (std::size_t i = 0; i < rest.size(); ++i) {
    rest[i] -= overlap * yes[i];
  }
  return mud_measure(Ket::normalized(std::move(rest)), pom, rng);
}

}  // namespace qsearch
