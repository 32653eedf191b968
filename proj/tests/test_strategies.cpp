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

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <stdexcept>

#include "qsearch/analytics.hpp"

namespace qsearch {
namespace {

const Strategy kAll[] = {Strategy::kClassical,   Strategy::kTestStateRelevant,
                         Strategy::kTestStateFull, Strategy::kMudRelevant,
                         Strategy::kMudFull,     Strategy::kGroverVerified};

SearchTranscript run(Strategy s, BlackBox& box, Rng& rng) {
  switch (s) {
    case Strategy::kClassical:
      return run_classical(box, rng);
    case Strategy::kTestStateRelevant:
      return run_teststate_relevant(box, rng);
    case Strategy::kTestStateFull:
      return run_teststate_full(box, rng);
    case Strategy::kMudRelevant:
      return run_mud(box, rng, false);
    case Strategy::kMudFull:
      return run_mud(box, rng, true);
    case Strategy::kGroverVerified:
      return run_grover_verified(box, box.dim() < 4 ? 1 : resolve_grover_k(box.dim(), 0), rng);
  }
  throw std::logic_error("unreachable");
}

TEST(StrategyNamesTest, RoundTrip) {
  for (Strategy s : kAll) {
    EXPECT_EQ(parse_strategy(strategy_name(s)), s);
  }
  EXPECT_FALSE(parse_strategy("bogus").has_value());
  EXPECT_EQ(minimum_dimension(Strategy::kMudFull), 5u);
  EXPECT_EQ(minimum_dimension(Strategy::kTestStateRelevant), 4u);
}

TEST(StrategyTest, RejectsTinyDimensions) {
  Rng rng(1);
  for (Strategy s : kAll) {
    for (std::size_t n : {2, 3}) {
      BlackBox box(n, 0);
      EXPECT_THROW(run(s, box, rng), std::invalid_argument) << strategy_name(s) << " " << n;
    }
  }
  BlackBox four(4, 0);
  EXPECT_THROW(run_mud(four, rng, true), std::invalid_argument);
  EXPECT_THROW(estimate({Strategy::kMudFull, 3, 10, 1}), std::invalid_argument);
  EXPECT_THROW(estimate({Strategy::kClassical, 8, 0, 1}), std::invalid_argument);
  EXPECT_THROW(estimate({Strategy::kGroverVerified, 12, 10, 1}), std::invalid_argument);
}

TEST(StrategyProperty, TranscriptsAreCorrectAndAccounted) {
  for (Strategy s : kAll) {
    for (std::size_t n : {5, 8, 16, 32}) {
      if (s == Strategy::kGroverVerified && !std::has_single_bit(n)) {
        continue;
      }
      for (std::uint64_t t = 0; t < 200; ++t) {
        Rng rng = Rng::for_trial(99, t);
        BlackBox box(n, rng.below(n));
        box.query(basis_ket(n, 0));  // prior usage must not leak into the count
        const SearchTranscript tr = run(s, box, rng);
        ASSERT_EQ(tr.found, box.reveal_for_testing()) << strategy_name(s);
        ASSERT_EQ(tr.queries + 1, box.queries()) << strategy_name(s);
        ASSERT_EQ(tr.strategy, s);
        ASSERT_EQ(tr.guesses.size(), tr.outcomes.size());
      }
    }
  }
}

TEST(StrategyProperty, RelevantRoundsBounded) {
  for (std::size_t n : {5, 9, 20}) {
    for (std::uint64_t t = 0; t < 500; ++t) {
      Rng rng = Rng::for_trial(5, t);
      BlackBox box(n, rng.below(n));
      EXPECT_LE(run_teststate_relevant(box, rng).queries, n - 3);
    }
  }
}

TEST(StrategyTest, ClassicalConcludesLastIndexForFree) {
  BlackBox box(4, 2);
  Rng rng(3);
  const SearchTranscript tr = run_classical(box, rng);
  EXPECT_EQ(tr.found, 2u);
  EXPECT_LE(tr.queries, 3u);
}

TEST(EstimateTest, ExactSmallCases) {
  const auto t4 = estimate({Strategy::kTestStateRelevant, 4, 1000, 12345});
  EXPECT_EQ(t4.mean, 1.0);
  EXPECT_EQ(t4.stderr_mean, 0.0);
  const auto q4 = estimate({Strategy::kGroverVerified, 4, 1000, 12345, 1});
  EXPECT_EQ(q4.mean, 2.0);
  EXPECT_EQ(q4.stderr_mean, 0.0);
}

TEST(EstimateTest, DeterministicAcrossRunsAndWorkers) {
  for (Strategy s : kAll) {
    const auto a = estimate({s, 16, 3000, 42, 0, 1});
    const auto b = estimate({s, 16, 3000, 42, 0, 1});
    const auto c = estimate({s, 16, 3000, 42, 0, 3});
    EXPECT_EQ(std::bit_cast<std::uint64_t>(a.mean), std::bit_cast<std::uint64_t>(b.mean));
    EXPECT_EQ(std::bit_cast<std::uint64_t>(a.mean), std::bit_cast<std::uint64_t>(c.mean));
    EXPECT_EQ(std::bit_cast<std::uint64_t>(a.stderr_mean),
              std::bit_cast<std::uint64_t>(c.stderr_mean));
    EXPECT_EQ(simulate_query_counts({s, 16, 500, 42, 0, 1}),
              simulate_query_counts({s, 16, 500, 42, 0, 4}));
  }
  EXPECT_NE(estimate({Strategy::kClassical, 64, 2000, 1}).mean,
            estimate({Strategy::kClassical, 64, 2000, 2}).mean);
}

TEST(EstimateTest, AgreesWithClosedForms) {
  for (Strategy s : kAll) {
    for (std::size_t n : {8, 16}) {
      const auto st = estimate({s, n, 20000, 7});
      const double g = analytic_queries(s, n);
      EXPECT_LE(std::abs(st.mean - g), 3 * st.stderr_mean)
          << strategy_name(s) << " N=" << n << " mean " << st.mean << " analytic " << g;
    }
  }
}

TEST(EstimateTest, AnalyticMapping) {
  EXPECT_DOUBLE_EQ(analytic_queries(Strategy::kClassical, 64), g_classical(64));
  EXPECT_DOUBLE_EQ(analytic_queries(Strategy::kMudFull, 8), g_mud_fullspace(8));
  EXPECT_DOUBLE_EQ(analytic_queries(Strategy::kGroverVerified, 64), g_grover(64, 4));
  EXPECT_DOUBLE_EQ(analytic_queries(Strategy::kGroverVerified, 64, 6), g_grover(64, 6));
  EXPECT_EQ(resolve_grover_k(64, 0), 4);
  EXPECT_EQ(resolve_grover_k(64, 2), 2);
}

TEST(GroverVerifiedTest, FollowPointerStaysCorrect) {
  for (std::uint64_t t = 0; t < 300; ++t) {
    Rng rng = Rng::for_trial(8, t);
    BlackBox box(32, rng.below(32));
    const auto tr = run_grover_verified(box, 2, rng, {.follow_pointer = true});
    ASSERT_EQ(tr.found, box.reveal_for_testing());
    ASSERT_EQ(tr.queries, box.queries());
  }
  BlackBox box(16, 0);
  Rng rng(0);
  EXPECT_THROW(run_grover_verified(box, 0, rng), std::invalid_argument);
}

TEST(PairVerificationTest, ExhaustiveSmallRegisters) {
  for (std::size_t dim : {4, 8, 16}) {
    for (std::size_t h = 0; h < dim; ++h) {
      for (std::size_t j = 0; j < dim; ++j) {
        BlackBox box(dim, h);
        const PairVerification v = run_appendixA_verify(box, j);
        EXPECT_EQ(v.is_claimed, h == j) << dim << " " << h << " " << j;
        EXPECT_EQ(box.queries(), static_cast<std::uint64_t>(v.queries));
      }
    }
  }
  BlackBox tiny(2, 0);
  EXPECT_THROW(run_appendixA_verify(tiny, 0), std::invalid_argument);
}

TEST(PairVerificationTest, OneQueryWhenFirstPairMisses) {
  // j = 000 pairs with 100 first; oracle 110 is outside that pair.
  BlackBox box(8, 6);
  const PairVerification v = run_appendixA_verify(box, 0);
  EXPECT_FALSE(v.is_claimed);
  EXPECT_EQ(v.queries, 1);
}

}  // namespace
}  // namespace qsearch
