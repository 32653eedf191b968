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

#include "qsearch/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

#include "qsearch/analytics.hpp"
#include "qsearch/circuits.hpp"
#include "qsearch/teststate.hpp"

namespace qsearch {

namespace {

void require_dimension(const BlackBox& box, Strategy strategy) {
  if (box.dim() < minimum_dimension(strategy)) {
    throw std::invalid_argument(
        std::string(strategy_name(strategy)) + " requires N >= " +
        std::to_string(minimum_dimension(strategy)) + ", got N = " +
        std::to_string(box.dim()));
  }
}

// Indices not yet ruled out, with O(1) exclusion and uniform draws.
class Unexcluded {
 public:
  explicit Unexcluded(std::size_t n) : slot_(n), indices_(n) {
    for (std::size_t i = 0; i < n; ++i) {
      slot_[i] = i;
      indices_[i] = i;
    }
  }

  std::size_t count() const { return indices_.size(); }
  bool contains(std::size_t index) const { return slot_[index] != kGone; }
  std::size_t only() const { return indices_.front(); }
  std::size_t draw(Rng& rng) const { return indices_[rng.below(indices_.size())]; }

  void exclude(std::size_t index) {
    const std::size_t s = slot_[index];
    const std::size_t last = indices_.back();
    indices_[s] = last;
    slot_[last] = s;
    indices_.pop_back();
    slot_[index] = kGone;
  }

 private:
  static constexpr std::size_t kGone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> slot_;
  std::vector<std::size_t> indices_;
};

struct Round {
  SearchTranscript& transcript;

  void record(std::size_t guess, PomOutcome outcome) {
    transcript.guesses.push_back(guess);
    transcript.outcomes.push_back(outcome);
  }
};

SearchTranscript finish(SearchTranscript transcript, const BlackBox& box,
                        std::size_t found) {
  transcript.found = found;
  transcript.queries = box.queries();
  return transcript;
}

}  // namespace

std::string_view strategy_name(Strategy strategy) {
  switch (strategy) {
    case Strategy::kClassical:
      return "classical";
    case Strategy::kTestStateRelevant:
      return "teststate_relevant";
    case Strategy::kTestStateFull:
      return "teststate_full";
    case Strategy::kMudRelevant:
      return "mud_relevant";
    case Strategy::kMudFull:
      return "mud_full";
    case Strategy::kGroverVerified:
      return "grover_verified";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (Strategy s : {Strategy::kClassical, Strategy::kTestStateRelevant,
                     Strategy::kTestStateFull, Strategy::kMudRelevant,
                     Strategy::kMudFull, Strategy::kGroverVerified}) {
    if (strategy_name(s) == name) {
      return s;
    }
  }
  return std::nullopt;
}

std::size_t minimum_dimension(Strategy strategy) {
  switch (strategy) {
    case Strategy::kClassical:
    case Strategy::kTestStateRelevant:
    case Strategy::kGroverVerified:
      return 4;
    case Strategy::kTestStateFull:
    case Strategy::kMudRelevant:
    case Strategy::kMudFull:
      return 5;
  }
  return 0;
}

SearchTranscript run_classical(BlackBox& box, Rng& rng) {
  require_dimension(box, Strategy::kClassical);
  const std::uint64_t start = box.queries();
  SearchTranscript t{Strategy::kClassical, {}, {}, 0, 0};
  Round round{t};
  Unexcluded left(box.dim());
  while (left.count() > 1) {
    const std::size_t guess = left.draw(rng);
    // Membership test on the index ket: the oracle imprints a sign on it
    // exactly when it matches.
    const Ket out = box.query(basis_ket(box.dim(), guess));
    if (out[guess].real() < 0) {
      round.record(guess, PomOutcome::yes(guess));
      t = finish(std::move(t), box, guess);
      t.queries -= start;
      return t;
    }
    round.record(guess, PomOutcome::no());
    left.exclude(guess);
  }
  t = finish(std::move(t), box, left.only());
  t.queries -= start;
  return t;
}

SearchTranscript run_teststate_relevant(BlackBox& box, Rng& rng) {
  require_dimension(box, Strategy::kTestStateRelevant);
  const std::uint64_t start = box.queries();
  SearchTranscript t{Strategy::kTestStateRelevant, {}, {}, 0, 0};
  Round round{t};
  CandidateSet set = CandidateSet::full(box.dim());
  std::size_t guess = rng.below(box.dim());
  while (true) {
    const Ket out = box.query(test_state(set, guess));
    const PomOutcome outcome = srm_measure(out, Srm(set, guess), rng);
    round.record(guess, outcome);
    if (outcome.kind == OutcomeKind::kYes) {
      break;
    }
    if (set.size() == 4) {
      // Four candidates share one test state and their "no" states are
      // orthogonal, so the pointer is certain.
      guess = outcome.index;
      break;
    }
    set = set.without(guess);
    guess = outcome.index;
  }
  t = finish(std::move(t), box, guess);
  t.queries -= start;
  return t;
}

SearchTranscript run_teststate_full(BlackBox& box, Rng& rng) {
  require_dimension(box, Strategy::kTestStateFull);
  const std::uint64_t start = box.queries();
  SearchTranscript t{Strategy::kTestStateFull, {}, {}, 0, 0};
  Round round{t};
  const CandidateSet all = CandidateSet::full(box.dim());
  Unexcluded left(box.dim());
  std::size_t guess = left.draw(rng);
  while (left.count() > 1) {
    const Ket out = box.query(test_state(all, guess));
    const PomOutcome outcome = srm_measure(out, Srm(all, guess), rng);
    round.record(guess, outcome);
    if (outcome.kind == OutcomeKind::kYes) {
      t = finish(std::move(t), box, guess);
      t.queries -= start;
      return t;
    }
    left.exclude(guess);
    guess = left.contains(outcome.index) ? outcome.index : left.draw(rng);
  }
  t = finish(std::move(t), box, left.only());
  t.queries -= start;
  return t;
}

SearchTranscript run_mud(BlackBox& box, Rng& rng, bool fullspace) {
  const Strategy tag = fullspace ? Strategy::kMudFull : Strategy::kMudRelevant;
  require_dimension(box, tag);
  const std::uint64_t start = box.queries();
  SearchTranscript t{tag, {}, {}, 0, 0};
  Round round{t};
  const std::size_t n = box.dim();
  const CandidateSet all = CandidateSet::full(n);
  CandidateSet set = all;
  Unexcluded left(n);
  std::size_t guess = left.draw(rng);
  std::size_t found = 0;
  while (true) {
    if (left.count() == 1) {
      found = left.only();
      break;
    }
    const CandidateSet& space = fullspace ? all : set;
    const Ket out = box.query(test_state(space, guess));
    if (space.size() == 4) {
      // Orthogonal "no" states: the SRM already discriminates perfectly.
      const PomOutcome outcome = srm_measure(out, Srm(space, guess), rng);
      round.record(guess, outcome);
      found = outcome.index;
      break;
    }
    const PomOutcome outcome = test_then_mud(out, build_mud(space, guess), rng);
    round.record(guess, outcome);
    if (outcome.kind == OutcomeKind::kYes || outcome.kind == OutcomeKind::kPointsTo) {
      found = outcome.index;
      break;
    }
    left.exclude(guess);
    if (!fullspace) {
      set = set.without(guess);
    }
    guess = left.draw(rng);
  }
  t = finish(std::move(t), box, found);
  t.queries -= start;
  return t;
}

SearchTranscript run_grover_verified(BlackBox& box, int k, Rng& rng,
                                     GroverVerifyOptions options) {
  require_dimension(box, Strategy::kGroverVerified);
  qubit_count(box.dim());
  if (k < 1) {
    throw std::invalid_argument("grover_verified requires k >= 1");
  }
  if (GroverParams::make(box.dim(), k).success_probability() < 1e-12) {
    throw std::invalid_argument("grover_verified: cycle never succeeds for this k");
  }
  const std::uint64_t start = box.queries();
  SearchTranscript t{Strategy::kGroverVerified, {}, {}, 0, 0};
  Round round{t};
  const CandidateSet all = CandidateSet::full(box.dim());
  std::vector<bool> known_wrong(box.dim(), false);
  while (true) {
    std::size_t candidate = grover_cycle(box, k, rng);
    while (!known_wrong[candidate]) {
      const Ket out = box.query(test_state(all, candidate));
      const PomOutcome outcome = srm_measure(out, Srm(all, candidate), rng);
      round.record(candidate, outcome);
      if (outcome.kind == OutcomeKind::kYes) {
        t = finish(std::move(t), box, candidate);
        t.queries -= start;
        return t;
      }
      known_wrong[candidate] = true;
      if (!options.follow_pointer) {
        break;
      }
      candidate = outcome.index;
    }
  }
}

PairVerification run_appendixA_verify(BlackBox& box, std::size_t j) {
  const int n = qubit_count(box.dim());
  if (n < 2) {
    throw std::invalid_argument("pair verification needs at least two qubits");
  }
  const OracleSlot slot = [&box](Ket s) { return box.query(std::move(s)); };
  const Ket zero = basis_ket(box.dim(), 0);
  const Ket first = simulate(compile_appendixA(n, j, 1), zero, slot);
  if (qubit_probability(first, QubitIndex(1), 1) < 0.5) {
    return {false, 1};
  }
  const Ket second = simulate(compile_appendixA(n, j, 2), zero, slot);
  return {qubit_probability(second, QubitIndex(2), 1) > 0.5, 2};
}

int resolve_grover_k(std::size_t n, int grover_k) {
  return grover_k > 0 ? grover_k : g_grover_opt(n).k_opt;
}

double analytic_queries(Strategy strategy, std::size_t n, int grover_k) {
  switch (strategy) {
    case Strategy::kClassical:
      return g_classical(n);
    case Strategy::kTestStateRelevant:
      return g_teststate(n);
    case Strategy::kTestStateFull:
      return g_teststate_fullspace(n);
    case Strategy::kMudRelevant:
      return g_mud(n);
    case Strategy::kMudFull:
      return g_mud_fullspace(n);
    case Strategy::kGroverVerified:
      return g_grover(n, resolve_grover_k(n, grover_k));
  }
  throw std::logic_error("analytic_queries: unknown strategy");
}

namespace {

std::uint64_t run_trial(const EstimateOptions& options, int grover_k,
                        std::uint64_t trial) {
  Rng rng = Rng::for_trial(options.seed, trial);
  BlackBox box(options.n, rng.below(options.n));
  SearchTranscript t{options.strategy, {}, {}, 0, 0};
  switch (options.strategy) {
    case Strategy::kClassical:
      t = run_classical(box, rng);
      break;
    case Strategy::kTestStateRelevant:
      t = run_teststate_relevant(box, rng);
      break;
    case Strategy::kTestStateFull:
      t = run_teststate_full(box, rng);
      break;
    case Strategy::kMudRelevant:
      t = run_mud(box, rng, false);
      break;
    case Strategy::kMudFull:
      t = run_mud(box, rng, true);
      break;
    case Strategy::kGroverVerified:
      t = run_grover_verified(box, grover_k, rng);
      break;
  }
  if (t.found != box.reveal_for_testing()) {
    throw std::logic_error(std::string(strategy_name(options.strategy)) +
                           ": transcript concluded a wrong index");
  }
  if (t.queries != box.queries()) {
    throw std::logic_error(std::string(strategy_name(options.strategy)) +
                           ": transcript query count disagrees with the box");
  }
  return t.queries;
}

}  // namespace

std::vector<std::uint64_t> simulate_query_counts(const EstimateOptions& options) {
  if (options.trials < 1) {
    throw std::invalid_argument("estimate: trials must be at least 1");
  }
  if (options.n < minimum_dimension(options.strategy)) {
    throw std::invalid_argument(
        std::string(strategy_name(options.strategy)) + " requires N >= " +
        std::to_string(minimum_dimension(options.strategy)));
  }
  int grover_k = 0;
  if (options.strategy == Strategy::kGroverVerified) {
    qubit_count(options.n);
    grover_k = resolve_grover_k(options.n, options.grover_k);
  }

  std::vector<std::uint64_t> counts(options.trials);
  const unsigned workers = std::max(1u, options.workers);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      for (std::uint64_t t = w; t < options.trials; t += workers) {
        counts[t] = run_trial(options, grover_k, t);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(work, w);
    }
    for (auto& th : pool) {
      th.join();
    }
  }
  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  return counts;
}

StrategyStats estimate(const EstimateOptions& options) {
  const auto counts = simulate_query_counts(options);
  // Integer accumulation keeps the aggregate independent of trial order.
  unsigned __int128 sum = 0;
  unsigned __int128 sum_sq = 0;
  for (std::uint64_t c : counts) {
    sum += c;
    sum_sq += static_cast<unsigned __int128>(c) * c;
  }
  const long double trials = static_cast<long double>(options.trials);
  const long double mean = static_cast<long double>(sum) / trials;
  long double stderr_mean = 0;
  if (options.trials > 1) {
    const long double centered =
        static_cast<long double>(sum_sq) - static_cast<long double>(sum) * mean;
    const long double variance = std::max(0.0L, centered / (trials - 1));
    stderr_mean = std::sqrt(variance / trials);
  }
  return {options.strategy,
          options.n,
          options.trials,
          options.seed,
          static_cast<double>(mean),
          static_cast<double>(stderr_mean)};
}

}  // namespace qsearch
