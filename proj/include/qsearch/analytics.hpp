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

#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "qsearch/measurement.hpp"

namespace qsearch {

namespace analytics_detail {
double smallest_root_of_tan_equals_2x();
}  // namespace analytics_detail

/// Large-N constants of the query-count formulas.
namespace constants {
/// alpha_L ~ (3 + sqrt 8)/L.
inline const double kAlphaAsymptote = 3.0 + std::sqrt(8.0);
/// G_T(N) ~ N/(4 + sqrt 8) = N/6.83.
inline const double kTestStateDivisor = 4.0 + std::sqrt(8.0);
/// G_C(N)/G_T(N) -> 2 + sqrt 2 = 3.41.
inline const double kTestStateSpeedup = 2.0 + std::sqrt(2.0);
/// gamma = 2 + sqrt 8 governs the full-space decay x^N ~ e^-gamma.
inline const double kGamma = 2.0 + std::sqrt(8.0);
/// G_T'(N) ~ N (e^-gamma - 1 + gamma)/gamma^2 = N/6.08.
inline const double kFullSpaceDivisor =
    kGamma * kGamma / (std::exp(-kGamma) - 1.0 + kGamma);
/// G_MUD(N) ~ N/4.
inline const double kMudDivisor = 4.0;
/// G_MUD'(N) ~ N (1 + e^-2)/4 = N/3.52.
inline const double kMudFullDivisor = 4.0 / (1.0 + std::exp(-2.0));
/// phi = 1.1656, smallest positive solution of 2 phi = tan phi.
inline const double kGroverPhi = analytics_detail::smallest_root_of_tan_equals_2x();
/// lim G_Q(N)/sqrt(N) = (phi/2)/sin(phi)^2 = 0.6900.
inline const double kGroverQueryLimit =
    (kGroverPhi / 2.0) / (std::sin(kGroverPhi) * std::sin(kGroverPhi));
/// k_opt ~ (phi/2) sqrt(N) = 0.58 sqrt(N).
inline const double kGroverIterationRatio = kGroverPhi / 2.0;
}  // namespace constants

struct CurvePoint {
  std::size_t n;
  double queries;
};

/// Expected oracle queries as a function of N for one strategy.
struct QueryCurve {
  std::string strategy;
  std::vector<CurvePoint> points;
};

/// Optimal Grover cycle length for N together with G_Q at that length.
struct GroverPlan {
  std::size_t n;
  int k_opt;
  double queries;
};

/// (N+1)/2 - 1/N.
double g_classical(std::size_t n);
/// Same value via G_C(N+1) = 1 + N/(N+1) G_C(N), G_C(1) = 0.
double g_classical_recurrence(std::size_t n);

/// Relevant-space test-state search, iterating
/// G_T(M+1) = 1 + M/(M+1) (alpha_M - beta_M) + M^2 beta_M/(M+1) G_T(M)
/// from G_T(4) = 1.
double g_teststate(std::size_t n);

/// The same recurrence with caller-supplied conditional probabilities
/// (indexed by the number of "no" outcomes M).
double g_teststate_with(
    std::size_t n,
    const std::function<ConditionalProbabilities(std::size_t)>& probabilities);

/// p_1..p_{N-3}: probability that the relevant-space search ends in round m.
/// Requires N > 4.
std::vector<double> termination_probs(std::size_t n);

/// Full-space test-state search, with x = (N-1) beta_{N-1}. Requires N >= 5.
double g_teststate_fullspace(std::size_t n);

/// k/p + (N - p)/(1 + (N-2) p), p = sin((2k+1) theta_N)^2.
double g_grover(std::size_t n, int k);
/// Exhaustive scan over k in [1, ceil(2 sqrt N)]; the smallest k wins ties.
GroverPlan g_grover_opt(std::size_t n);

/// MUD search in the relevant subspace, (N-1)(3N+4)/(12N). Requires N >= 5.
double g_mud(std::size_t n);
/// MUD search in the full space, x = (N-4)/(N-2). Requires N >= 5.
double g_mud_fullspace(std::size_t n);

struct Figure1 {
  QueryCurve classical;
  QueryCurve grover;
  QueryCurve teststate;
};

/// G_C, optimized G_Q and G_T sampled at n_min, n_min + step, ... <= n_max.
Figure1 figure1_curves(std::size_t n_min, std::size_t n_max, std::size_t step = 1);

}  // namespace qsearch
