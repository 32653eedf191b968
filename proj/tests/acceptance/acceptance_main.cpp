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

// Acceptance gate: one pass/fail line per criterion. Reference vectors are
// built here from their defining formulas rather than through the library.

#include <fmt/format.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "qsearch/analytics.hpp"
#include "qsearch/circuits.hpp"
#include "qsearch/measurement.hpp"
#include "qsearch/oracle.hpp"
#include "qsearch/strategies.hpp"
#include "qsearch/teststate.hpp"

using namespace qsearch;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

constexpr std::uint64_t kSeed = 20260415;

std::vector<Amplitude> reference_test_state(std::size_t m, std::size_t j) {
  const double a = std::sqrt((m - 3.0) / (2.0 * m - 4.0));
  const double b = std::sqrt(1.0 / (2.0 * m - 4.0));
  std::vector<Amplitude> v(m, b);
  v[j] = a;
  return v;
}

double overlap_sq(std::span<const Amplitude> u, std::span<const Amplitude> v) {
  Amplitude s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    s += std::conj(u[i]) * v[i];
  }
  return std::norm(s);
}

Eigen::VectorXcd as_vector(std::span<const Amplitude> v) {
  Eigen::VectorXcd out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out(i) = v[i];
  }
  return out;
}

Outcome grover_success() {
  double worst = 0;
  std::size_t cases = 0;
  for (int n = 1; n <= 10; ++n) {
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t hidden = (5 * dim) / 7;
    const double theta = std::asin(1 / std::sqrt(double(dim)));
    // Plain real-amplitude iteration as the reference.
    std::vector<double> ref(dim, 1 / std::sqrt(double(dim)));
    BlackBox box(dim, hidden);
    for (int k = 1; k <= 2 * std::sqrt(double(dim)); ++k) {
      ref[hidden] = -ref[hidden];
      double mean = 0;
      for (double x : ref) {
        mean += x;
      }
      mean /= dim;
      for (double& x : ref) {
        x = 2 * mean - x;
      }
      const double closed = std::pow(std::sin((2 * k + 1) * theta), 2);
      const double simulated = std::norm(grover_state(box, k)[hidden]);
      worst = std::max({worst, std::abs(simulated - closed), std::abs(ref[hidden] * ref[hidden] - closed)});
      ++cases;
    }
  }
  BlackBox four(4, 1);
  const double p4 = std::norm(grover_state(four, 1)[1]);
  return {worst <= 1e-10 && std::abs(p4 - 1) <= 1e-10,
          fmt::format("{} (N,k) cases, max deviation {:.2e}, p(N=4,k=1) = {:.17g}", cases, worst,
                      p4)};
}

Outcome srm_structure() {
  double gram = 0;
  double probs = 0;
  for (std::size_t m = 5; m <= 64; ++m) {
    const std::size_t j = m % 5;
    const auto basis = srm_basis(CandidateSet::full(m), j);
    for (std::size_t u = 0; u < m; ++u) {
      for (std::size_t v = 0; v < m; ++v) {
        Amplitude s = 0;
        for (std::size_t i = 0; i < m; ++i) {
          s += std::conj(basis[u][i]) * basis[v][i];
        }
        gram = std::max(gram, std::abs(s - (u == v ? 1.0 : 0.0)));
      }
    }
    const auto ab = alpha_beta(m - 1);
    for (std::size_t k = 0; k < m; ++k) {
      auto t = reference_test_state(m, j);
      t[k] = -t[k];
      for (std::size_t l = 0; l < m; ++l) {
        const double want = k == j ? (l == j ? 1 : 0) : (l == k ? ab.alpha : (l == j ? 0 : ab.beta));
        probs = std::max(probs, std::abs(overlap_sq(basis[l].amplitudes(), t) - want));
      }
    }
  }
  const auto ab3 = alpha_beta(3);
  const bool three = std::abs(ab3.alpha - 1) <= 1e-10 && std::abs(ab3.beta) <= 1e-10;
  return {gram <= 1e-10 && probs <= 1e-10 && three,
          fmt::format("M in [5,64]: Gram deviation {:.2e}, case deviation {:.2e}; alpha_3 = {}, "
                      "beta_3 = {:.2e}",
                      gram, probs, ab3.alpha, ab3.beta)};
}

Outcome monte_carlo() {
  bool ok = true;
  std::string detail;
  double worst_z = 0;
  for (Strategy s : {Strategy::kClassical, Strategy::kTestStateRelevant, Strategy::kTestStateFull,
                     Strategy::kMudRelevant, Strategy::kMudFull}) {
    for (std::size_t n : {8, 16, 32, 64}) {
      const auto st = estimate({s, n, 100000, kSeed + n});
      const double g = analytic_queries(s, n);
      const double z = (st.mean - g) / st.stderr_mean;
      worst_z = std::max(worst_z, std::abs(z));
      if (!(std::abs(z) <= 3)) {
        ok = false;
        detail += fmt::format(" {}@{} z={:.2f};", strategy_name(s), n, z);
      }
    }
  }
  const bool spots = g_classical(64) == 32.484375 && std::abs(g_teststate(5) - 1.8) <= 1e-12 &&
                     g_teststate(4) == 1.0 && std::abs(g_mud(8) - 196.0 / 96.0) <= 1e-12;
  return {ok && spots, fmt::format("20 runs of 1e5 trials, max |z| = {:.2f}; spot values {}{}",
                                   worst_z, spots ? "exact" : "WRONG", detail)};
}

Outcome grover_verification() {
  const std::size_t n = 64;
  const int k = g_grover_opt(n).k_opt;
  const auto st = estimate({Strategy::kGroverVerified, n, 100000, kSeed, k});
  const double g = g_grover(n, k);
  const double tol = std::max(3 * st.stderr_mean, 0.01 * g);
  const auto counts = simulate_query_counts({Strategy::kGroverVerified, 4, 10000, kSeed, 1});
  const bool all_two = std::all_of(counts.begin(), counts.end(), [](auto c) { return c == 2; });
  return {std::abs(st.mean - g) <= tol && all_two,
          fmt::format("N=64 k={}: mean {:.5f}, closed form {:.5f}, |diff| {:.5f} <= {:.5f}; "
                      "N=4 k=1 always 2 queries: {}",
                      k, st.mean, g, std::abs(st.mean - g), tol, all_two ? "yes" : "no")};
}

Outcome asymptotes() {
  const std::size_t n = std::size_t{1} << 20;
  const double nd = static_cast<double>(n);
  const double gt = g_teststate(n);
  const auto plan = g_grover_opt(n);
  const double r[] = {
      std::abs(gt / g_classical(n) * 3.41 - 1),         std::abs(gt * 6.83 / nd - 1),
      std::abs(g_teststate_fullspace(n) * 6.08 / nd - 1), std::abs(plan.queries / std::sqrt(nd) / 0.6900 - 1),
      std::abs(plan.k_opt / std::sqrt(nd) / 0.58 - 1),  std::abs(g_mud(n) / (nd / 4) - 1),
      std::abs(g_mud_fullspace(n) / (nd / 3.52) - 1),
  };
  const double tol[] = {0.01, 0.01, 0.01, 0.005, 0.02, 0.01, 0.01};
  bool ok = true;
  for (int i = 0; i < 7; ++i) {
    ok = ok && r[i] <= tol[i];
  }
  return {ok, fmt::format("relative errors: G_T/G_C {:.4f}, G_T {:.4f}, G_T' {:.4f}, G_Q {:.4f}, "
                          "k_opt {:.4f}, G_MUD {:.4f}, G_MUD' {:.4f}",
                          r[0], r[1], r[2], r[3], r[4], r[5], r[6])};
}

Outcome circuits() {
  // Preparation.
  double prep = 0;
  for (int n : {2, 3, 4, 5}) {
    const std::size_t dim = std::size_t{1} << n;
    const Ket out = simulate(compile_teststate_prep(n), basis_ket(dim, 0));
    prep = std::max(prep, 1 - overlap_sq(out.amplitudes(), reference_test_state(dim, 0)));
  }
  for (std::size_t j = 0; j < 8; ++j) {
    const Ket out = simulate(localize_teststate(compile_teststate_prep(3), j), basis_ket(8, 0));
    prep = std::max(prep, 1 - overlap_sq(out.amplitudes(), reference_test_state(8, j)));
  }

  // SRM unitary: T_0^l goes to |l>, and the eigenkets behave as stated.
  double srm = 0;
  for (int n : {3, 4}) {
    const std::size_t dim = std::size_t{1} << n;
    const Eigen::MatrixXcd m = implemented_operator(compile_srm_unitary(n));
    const double a = std::sqrt((dim - 3.0) / (2.0 * dim - 4.0));
    const double b = std::sqrt(1.0 / (2.0 * dim - 4.0));
    const double y = (1 + a) / (dim - 1.0);
    const double x = 1 - y;
    for (std::size_t l = 0; l < dim; ++l) {
      std::vector<Amplitude> t(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        if (l == 0) {
          t[i] = i == 0 ? -a : b;
        } else {
          t[i] = i == 0 ? Amplitude(b) : (i == l ? Amplitude(-x) : Amplitude(y));
        }
      }
      srm = std::max(srm, std::abs(std::abs((m * as_vector(t))(l)) - 1));
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(dim);
    v(0) = 0;
    Eigen::VectorXcd e0 = b / std::sqrt(2 * (1 - a)) * v;
    e0(0) = std::sqrt((1 - a) / 2);
    Eigen::VectorXcd e1 = b / std::sqrt(2 * (1 + a)) * v;
    e1(0) = -std::sqrt((1 + a) / 2);
    srm = std::max(srm, (m * e0 - e0).cwiseAbs().maxCoeff());
    srm = std::max(srm, (m * e1 + e1).cwiseAbs().maxCoeff());
    for (std::size_t j = 2; j < dim; ++j) {
      Eigen::VectorXcd e = Eigen::VectorXcd::Zero(dim);
      e(1) = -1 / std::sqrt(2.0);
      e(j) = 1 / std::sqrt(2.0);
      srm = std::max(srm, (m * e + e).cwiseAbs().maxCoeff());
    }
  }

  // Pair confirmation truth table.
  std::size_t mismatches = 0;
  for (int n : {3, 4}) {
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t flip = dim >> 1;
    for (std::size_t j = 0; j < dim; ++j) {
      const Circuit c = compile_appendixA(n, j);
      for (std::size_t h = 0; h < dim; ++h) {
        const Ket out = simulate(c, basis_ket(dim, 0), [h](Ket s) {
          auto amps = std::move(s).release();
          amps[h] = -amps[h];
          return Ket::from_amplitudes(std::move(amps));
        });
        double p1 = 0;
        for (std::size_t i = flip; i < dim; ++i) {
          p1 += std::norm(out[i]);
        }
        const bool expect = h == j || h == (j ^ flip);
        mismatches += std::abs(p1 - (expect ? 1.0 : 0.0)) > 1e-10;
      }
    }
  }

  // Star-graph preparation.
  double graph = 0;
  const int runs = 100000;
  int ones = 0;
  bool both = true;
  for (int n : {2, 3, 4}) {
    const std::size_t dim = std::size_t{1} << n;
    const double norm = std::sqrt(2.0 * dim - 4.0);
    std::vector<Amplitude> target(dim, Amplitude(0, -1) / norm);
    target[0] = Amplitude(std::sqrt(dim - 4.0), -1) / norm;
    Rng rng(kSeed + n);
    bool seen[2] = {false, false};
    const int count = n == 3 ? runs : 500;
    for (int i = 0; i < count; ++i) {
      const auto r = prepare_appendixB(n, rng);
      seen[r.ancilla_bit] = true;
      graph = std::max(graph, 1 - overlap_sq(r.state.amplitudes(), target));
      if (n == 3) {
        ones += r.ancilla_bit;
      }
    }
    both = both && seen[0] && seen[1];
  }
  const double freq = static_cast<double>(ones) / runs;
  const bool balanced = std::abs(freq - 0.5) <= 3 * std::sqrt(0.25 / runs);
  const double theta4 = appendix_b_angle(4);

  const bool ok = prep <= 1e-10 && srm <= 1e-9 && mismatches == 0 && graph <= 1e-10 && both &&
                  balanced && std::abs(theta4 - std::numbers::pi) <= 1e-12;
  return {ok, fmt::format("prep infidelity {:.2e}; SRM deviation {:.2e}; pair table mismatches {}; "
                          "star-graph infidelity {:.2e}, P(m=1) = {:.4f}; theta(N=4) = {:.17g}",
                          prep, srm, mismatches, graph, freq, theta4)};
}

Outcome determinism() {
  bool same = true;
  for (Strategy s : {Strategy::kClassical, Strategy::kTestStateRelevant, Strategy::kTestStateFull,
                     Strategy::kMudRelevant, Strategy::kMudFull, Strategy::kGroverVerified}) {
    const auto base = estimate({s, 32, 20000, kSeed, 0, 1});
    for (unsigned workers : {1u, 2u, 4u, 7u}) {
      const auto other = estimate({s, 32, 20000, kSeed, 0, workers});
      same = same && std::bit_cast<std::uint64_t>(base.mean) == std::bit_cast<std::uint64_t>(other.mean) &&
             std::bit_cast<std::uint64_t>(base.stderr_mean) ==
                 std::bit_cast<std::uint64_t>(other.stderr_mean);
    }
  }
  return {same, same ? "six strategies, 1/2/4/7 workers and repeats: bit-identical"
                     : "aggregates differ"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
    double time_limit_s;  // 0 = no limit
  };
  const Criterion criteria[] = {
      {1, "Grover success probability", grover_success, 10},
      {2, "SRM structure", srm_structure, 30},
      {3, "Monte Carlo vs closed forms", monte_carlo, 0},
      {4, "Grover with verification", grover_verification, 0},
      {5, "asymptotic constants at N=2^20", asymptotes, 60},
      {6, "circuits", circuits, 0},
      {7, "determinism", determinism, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, fmt::format("threw: {}", e.what())};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs > c.time_limit_s) {
      out.passed = false;
      out.detail += fmt::format("; over the {:.0f} s budget", c.time_limit_s);
    }
    failures += !out.passed;
    std::printf("[%s] criterion %d (%s): %s [%.1f s]\n", out.passed ? "PASS" : "FAIL", c.id,
                c.title, out.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
