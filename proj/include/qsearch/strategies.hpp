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
#include <optional>
#include <string_view>
#include <vector>

#include "qsearch/measurement.hpp"
#include "qsearch/oracle.hpp"
#include "qsearch/rng.hpp"

namespace qsearch {

enum class Strategy {
  kClassical,
  kTestStateRelevant,
  kTestStateFull,
  kMudRelevant,
  kMudFull,
  kGroverVerified,
};

std::string_view strategy_name(Strategy strategy);
std::optional<Strategy> parse_strategy(std::string_view name);
/// Smallest N the strategy accepts.
std::size_t minimum_dimension(Strategy strategy);

struct SearchTranscript {
  Strategy strategy;
  std::vector<std::size_t> guesses;    // indices tested with a query
  std::vector<PomOutcome> outcomes;    // one per query round
  std::uint64_t queries = 0;           // oracle invocations
  std::size_t found = 0;               // terminating index
};

/// Tests uniformly random untried indices; after N-1 "no" answers the last
/// index is concluded without a query.
SearchTranscript run_classical(BlackBox& box, Rng& rng);

/// Test-state search with the SRM in the shrinking relevant subspace. The
/// round on four candidates always identifies the oracle.
SearchTranscript run_teststate_relevant(BlackBox& box, Rng& rng);

/// Test-state search with full-space test states and SRM. The next guess is
/// the SRM pointer unless that index is already excluded, in which case it is
/// drawn uniformly from the unexcluded ones; a single remaining candidate is
/// concluded without a query.
SearchTranscript run_teststate_full(BlackBox& box, Rng& rng);

/// Test-state search with the MUD applied to "no" outcomes. A conclusive
/// outcome identifies the oracle with certainty and ends the search; an
/// inconclusive one leads to a uniformly random next guess. The relevant
/// variant shrinks the candidate set, the full-space variant only excludes.
SearchTranscript run_mud(BlackBox& box, Rng& rng, bool fullspace);

struct GroverVerifyOptions {
  /// After a "no", test the SRM pointer before the next Grover cycle.
  /// Off by default; the analytic accounting ignores the pointer.
  bool follow_pointer = false;
};

/// Grover cycles of k queries each; every new measured index is verified
/// with one test-state query and the full-space SRM ("yes"/"no" only).
/// Indices already known to be wrong are not verified again.
SearchTranscript run_grover_verified(BlackBox& box, int k, Rng& rng,
                                     GroverVerifyOptions options = {});

struct PairVerification {
  bool is_claimed;
  int queries;
};

/// Verifies a claimed index j with the pairing circuits: round one tests the
/// pair {j, j with qubit 1 flipped}; only on a positive answer does round two
/// re-pair j across qubit 2.
PairVerification run_appendixA_verify(BlackBox& box, std::size_t j);

struct StrategyStats {
  Strategy strategy;
  std::size_t n;
  std::uint64_t trials;
  std::uint64_t seed;
  double mean;
  double stderr_mean;  // sample stddev / sqrt(trials)
};

struct EstimateOptions {
  Strategy strategy;
  std::size_t n;
  std::uint64_t trials;
  std::uint64_t seed;
  int grover_k = 0;      // 0 selects the analytic optimum
  unsigned workers = 1;  // results do not depend on this
};

/// Runs independent trials; trial t uses Rng::for_trial(seed, t) to draw the
/// hidden index and drive the strategy. Every transcript is checked for
/// correctness and query accounting (std::logic_error on violation).
StrategyStats estimate(const EstimateOptions& options);

/// Per-trial query counts in trial order.
std::vector<std::uint64_t> simulate_query_counts(const EstimateOptions& options);

/// Closed-form expectation matching the strategy.
double analytic_queries(Strategy strategy, std::size_t n, int grover_k = 0);

/// Resolves grover_k = 0 to the analytic optimum.
int resolve_grover_k(std::size_t n, int grover_k);

}  // namespace qsearch
