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

#include "qsearch/analytics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

namespace qsearch {
namespace {

// Expectations below come from the Markov-chain oracle in tests/oracles.
struct Frozen {
  std::size_t n;
  double value;
};

TEST(ClassicalTest, ClosedFormAndRecurrence) {
  EXPECT_DOUBLE_EQ(g_classical(64), 32.484375);
  EXPECT_DOUBLE_EQ(g_classical(4), 2.25);
  EXPECT_DOUBLE_EQ(g_classical(1), 0.0);
  for (std::size_t n = 1; n <= 300; ++n) {
    EXPECT_NEAR(g_classical_recurrence(n), g_classical(n), 1e-10);
  }
  EXPECT_THROW(g_classical(0), std::domain_error);
}

TEST(TestStateTest, RelevantSpaceValues) {
  EXPECT_EQ(g_teststate(4), 1.0);
  EXPECT_NEAR(g_teststate(5), 1.8, 1e-12);
  for (const Frozen f : {Frozen{8, 2.2592269060985957}, Frozen{16, 3.4153000655259671},
                         Frozen{32, 5.7522479562056237}, Frozen{64, 10.435791370942836}}) {
    EXPECT_NEAR(g_teststate(f.n), f.value, 1e-9) << f.n;
  }
  EXPECT_THROW(g_teststate(3), std::domain_error);
}

TEST(TestStateTest, RecurrenceWithSuppliedProbabilities) {
  EXPECT_NEAR(g_teststate_with(40, alpha_beta), g_teststate(40), 1e-12);
  // Perfect pointers finish every search within two queries.
  const auto perfect = [](std::size_t) { return ConditionalProbabilities{1.0, 0.0}; };
  EXPECT_NEAR(g_teststate_with(30, perfect), 1 + 29.0 / 30.0, 1e-12);
}

TEST(TestStateTest, TerminationProbabilities) {
  for (std::size_t n : {5, 6, 17, 64}) {
    const auto p = termination_probs(n);
    ASSERT_EQ(p.size(), n - 3);
    double total = 0;
    double mean = 0;
    for (std::size_t m = 0; m < p.size(); ++m) {
      EXPECT_GE(p[m], 0);
      total += p[m];
      mean += (m + 1) * p[m];
    }
    EXPECT_NEAR(total, 1, 1e-12);
    EXPECT_NEAR(mean, g_teststate(n), 1e-10);
  }
  EXPECT_THROW(termination_probs(4), std::domain_error);
}

TEST(TestStateTest, FullSpaceValues) {
  for (const Frozen f : {Frozen{5, 1.8567808060295357}, Frozen{8, 2.3079974193449311},
                         Frozen{16, 3.6051614570912034}, Frozen{32, 6.2312116171864131},
                         Frozen{64, 11.494081474849114}}) {
    EXPECT_NEAR(g_teststate_fullspace(f.n), f.value, 1e-9) << f.n;
  }
  EXPECT_THROW(g_teststate_fullspace(4), std::domain_error);
}

TEST(MudTest, RelevantAndFullSpaceValues) {
  EXPECT_NEAR(g_mud(8), 196.0 / 96.0, 1e-12);
  for (const Frozen f : {Frozen{5, 1.2666666666666679}, Frozen{6, 1.5277777777777786},
                         Frozen{16, 4.0625}, Frozen{32, 8.0729166666667}}) {
    EXPECT_NEAR(g_mud(f.n), f.value, 1e-9) << f.n;
  }
  for (const Frozen f : {Frozen{5, 1.3481481481481503}, Frozen{6, 1.6666666666666676},
                         Frozen{8, 2.2719478737997281}, Frozen{16, 4.591643776306201},
                         Frozen{64, 18.248799393835657}}) {
    EXPECT_NEAR(g_mud_fullspace(f.n), f.value, 1e-9) << f.n;
  }
  EXPECT_THROW(g_mud(4), std::domain_error);
  EXPECT_THROW(g_mud_fullspace(4), std::domain_error);
}

TEST(GroverTest, QueryCounts) {
  EXPECT_NEAR(g_grover(4, 1), 2.0, 1e-12);
  EXPECT_NEAR(g_grover(16, 2), 3.3016655013399223, 1e-12);
  EXPECT_NEAR(g_grover(64, 4), 6.1238210261900372, 1e-12);
  EXPECT_NEAR(g_grover(64, 5), 6.2271735106235084, 1e-12);
  EXPECT_NEAR(g_grover(64, 6), 7.0239819307947489, 1e-12);
  const GroverPlan plan = g_grover_opt(64);
  EXPECT_EQ(plan.k_opt, 4);
  EXPECT_NEAR(plan.queries, 6.1238210261900372, 1e-12);
  EXPECT_EQ(g_grover_opt(4).k_opt, 1);
  EXPECT_THROW(g_grover(64, 0), std::domain_error);
  EXPECT_THROW(g_grover(3, 1), std::domain_error);
}

TEST(ConstantsTest, NamedValues) {
  EXPECT_NEAR(constants::kGroverPhi, 1.1656, 1e-4);
  EXPECT_NEAR(std::tan(constants::kGroverPhi), 2 * constants::kGroverPhi, 1e-12);
  EXPECT_NEAR(constants::kGroverQueryLimit, 0.6900, 1e-4);
  EXPECT_NEAR(constants::kGroverIterationRatio, 0.58, 0.005);
  EXPECT_NEAR(constants::kTestStateDivisor, 6.83, 0.005);
  EXPECT_NEAR(constants::kTestStateSpeedup, 3.41, 0.005);
  EXPECT_NEAR(constants::kFullSpaceDivisor, 6.08, 0.005);
  EXPECT_NEAR(constants::kMudFullDivisor, 3.52, 0.005);
  EXPECT_NEAR(constants::kAlphaAsymptote, 5.83, 0.005);
}

TEST(AsymptoticTest, AlphaScaling) {
  const std::size_t l = 100000;
  EXPECT_NEAR(alpha_beta(l).alpha * l / constants::kAlphaAsymptote, 1, 1e-3);
}

TEST(AsymptoticTest, LargeNRatios) {
  const std::size_t n = std::size_t{1} << 20;
  const double nd = static_cast<double>(n);
  const double gt = g_teststate(n);
  EXPECT_NEAR(gt / g_classical(n) * 3.41, 1, 0.01);
  EXPECT_NEAR(gt * 6.83 / nd, 1, 0.01);
  EXPECT_NEAR(g_teststate_fullspace(n) * 6.08 / nd, 1, 0.01);
  const GroverPlan plan = g_grover_opt(n);
  EXPECT_NEAR(plan.queries / std::sqrt(nd) / 0.6900, 1, 0.005);
  EXPECT_NEAR(plan.k_opt / std::sqrt(nd) / 0.58, 1, 0.02);
  EXPECT_NEAR(g_mud(n) * 4 / nd, 1, 0.01);
  EXPECT_NEAR(g_mud_fullspace(n) * 3.52 / nd, 1, 0.01);
}

TEST(Figure1Test, CurvesMatchPointwiseFormulas) {
  const Figure1 fig = figure1_curves(4, 40, 3);
  ASSERT_EQ(fig.classical.points.size(), 13u);
  EXPECT_EQ(fig.classical.strategy, "classical");
  for (std::size_t i = 0; i < fig.classical.points.size(); ++i) {
    const std::size_t n = fig.classical.points[i].n;
    EXPECT_EQ(n, 4 + 3 * i);
    EXPECT_NEAR(fig.classical.points[i].queries, g_classical(n), 1e-12);
    EXPECT_NEAR(fig.teststate.points[i].queries, g_teststate(n), 1e-12);
    EXPECT_NEAR(fig.grover.points[i].queries, g_grover_opt(n).queries, 1e-12);
  }
  EXPECT_THROW(figure1_curves(10, 5), std::invalid_argument);
  EXPECT_THROW(figure1_curves(4, 5, 0), std::invalid_argument);
  EXPECT_THROW(figure1_curves(3, 5), std::invalid_argument);
}

}  // namespace
}  // namespace qsearch
