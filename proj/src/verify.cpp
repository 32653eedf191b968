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

#include "qsearch/verify.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <exception>
#include <numbers>

#include "qsearch/analytics.hpp"
#include "qsearch/circuits.hpp"
#include "qsearch/measurement.hpp"
#include "qsearch/oracle.hpp"
#include "qsearch/strategies.hpp"
#include "qsearch/teststate.hpp"

namespace qsearch {

namespace {

using Check = std::function<CheckResult()>;

CheckResult verdict(std::string name, bool passed, std::string detail) {
  return {std::move(name), passed, std::move(detail)};
}

Ket random_ket(std::size_t dim, Rng& rng) {
  std::vector<Amplitude> amps(dim);
  for (auto& z : amps) {
    z = {rng.uniform() - 0.5, rng.uniform() - 0.5};
  }
  return Ket::normalized(std::move(amps));
}

Eigen::VectorXcd dense(const Ket& ket) {
  Eigen::VectorXcd v(ket.dim());
  for (std::size_t i = 0; i < ket.dim(); ++i) {
    v(i) = ket[i];
  }
  return v;
}

// --- statevector / oracle -------------------------------------------------

CheckResult gates_preserve_norm() {
  Rng rng(11);
  double worst = 0;
  for (int n = 2; n <= 6; ++n) {
    Ket s = random_ket(std::size_t{1} << n, rng);
    for (int q = 1; q <= n; ++q) {
      s = apply_single(gates::y_rotation(0.3 * q), QubitIndex(q), std::move(s));
      s = apply_single(gates::hadamard(), QubitIndex(q), std::move(s));
      if (q > 1) {
        const Control c{QubitIndex(q - 1), q % 2};
        s = apply_controlled(gates::pauli_z(), std::span(&c, 1), QubitIndex(q),
                             std::move(s));
      }
    }
    worst = std::max(worst, std::abs(s.norm_squared() - 1));
  }
  return verdict("statevector.norm_preserved", worst <= kTolerance,
                 fmt::format("max |norm^2 - 1| = {:.3g}", worst));
}

CheckResult grover_probability() {
  double worst = 0;
  for (int n = 1; n <= 10; ++n) {
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t hidden = dim / 3;
    const int k_max = static_cast<int>(std::floor(2 * std::sqrt(double(dim))));
    BlackBox box(dim, hidden);
    Ket s = uniform_superposition(dim);
    for (int k = 1; k <= k_max; ++k) {
      s = diffusion(box.query(std::move(s)));
      const double p = std::norm(s[hidden]);
      worst = std::max(worst,
                       std::abs(p - GroverParams::make(dim, k).success_probability()));
    }
  }
  BlackBox four(4, 2);
  const double p4 = std::norm(grover_state(four, 1)[2]);
  const bool ok = worst <= kTolerance && std::abs(p4 - 1) <= kTolerance;
  return verdict("oracle.grover_success_probability", ok,
                 fmt::format("max deviation {:.3g}, p(N=4,k=1) = {:.17g}", worst, p4));
}

// --- teststate ------------------------------------------------------------

CheckResult pyramid_overlaps() {
  double worst = 0;
  for (std::size_t m : {5, 6, 9, 16}) {
    const CandidateSet set = CandidateSet::full(m);
    const std::size_t j = m / 2;
    const Ket t = test_state(set, j);
    worst = std::max(worst, std::abs(t.norm_squared() - 1));
    std::vector<Ket> edges;
    for (std::size_t k = 0; k < m; ++k) {
      if (k != j) {
        edges.push_back(processed_state(set, j, k));
      }
    }
    for (std::size_t u = 0; u < edges.size(); ++u) {
      for (std::size_t v = u + 1; v < edges.size(); ++v) {
        worst = std::max(worst,
                         std::abs(inner(edges[u], edges[v]).real() - pyramid_overlap(m)));
      }
    }
  }
  return verdict("teststate.pyramid_overlap", worst <= kTolerance,
                 fmt::format("max deviation {:.3g}", worst));
}

CheckResult wrong_guess_orthogonal_to_yes() {
  double worst = 0;
  for (std::size_t m : {4, 5, 8, 13}) {
    const CandidateSet set = CandidateSet::full(m);
    const Ket yes = processed_state(set, 1, 1);
    for (std::size_t k = 0; k < m; ++k) {
      const double f = fidelity(yes, processed_state(set, 1, k));
      worst = std::max(worst, k == 1 ? 0.0 : f);
    }
  }
  return verdict("teststate.no_states_orthogonal_to_yes", worst <= kTolerance,
                 fmt::format("max |<O^j t_j|O^k t_j>|^2 = {:.3g}", worst));
}

// --- measurement ----------------------------------------------------------

CheckResult srm_structure() {
  double gram = 0;
  double probs = 0;
  for (std::size_t m = 5; m <= 64; ++m) {
    const CandidateSet set = CandidateSet::full(m);
    const std::size_t j = m - 2;
    const auto basis = srm_basis(set, j);
    for (std::size_t u = 0; u < m; ++u) {
      for (std::size_t v = 0; v < m; ++v) {
        gram = std::max(gram, std::abs(inner(basis[u], basis[v]) - (u == v ? 1.0 : 0.0)));
      }
    }
    const auto ab = alpha_beta(m - 1);
    for (std::size_t k = 0; k < m; ++k) {
      const Ket s = processed_state(set, j, k);
      for (std::size_t l = 0; l < m; ++l) {
        double expect = 0;
        if (k == j) {
          expect = l == j ? 1 : 0;
        } else if (l == k) {
          expect = ab.alpha;
        } else if (l != j) {
          expect = ab.beta;
        }
        probs = std::max(probs, std::abs(fidelity(basis[l], s) - expect));
      }
    }
  }
  const auto ab3 = alpha_beta(3);
  const bool three = std::abs(ab3.alpha - 1) <= kTolerance && std::abs(ab3.beta) <= kTolerance;
  return verdict("measurement.srm_basis_and_probabilities",
                 gram <= kTolerance && probs <= kTolerance && three,
                 fmt::format("gram {:.3g}, probabilities {:.3g}, alpha_3 = {:.17g}", gram,
                             probs, ab3.alpha));
}

CheckResult srm_structured_matches_dense() {
  Rng rng(5);
  double worst = 0;
  for (std::size_t m : {5, 7, 16}) {
    const CandidateSet set = CandidateSet::full(m);
    const Srm srm(set, 3);
    const auto basis = srm.basis();
    for (std::size_t k = 0; k < m; ++k) {
      const Ket s = processed_state(set, 3, k);
      const auto p = srm.outcome_probabilities(s);
      for (std::size_t l = 0; l < m; ++l) {
        worst = std::max(worst, std::abs(p[l] - fidelity(basis[l], s)));
      }
    }
  }
  return verdict("measurement.srm_structured_equals_dense", worst <= kTolerance,
                 fmt::format("max deviation {:.3g}", worst));
}

CheckResult mud_is_unambiguous() {
  double misid = 0;
  double success = 0;
  double completeness = 0;
  double min_eigen = 0;
  for (std::size_t m : {5, 6, 8, 12}) {
    const CandidateSet set = CandidateSet::full(m);
    const std::size_t j = 2;
    const MudPom pom = build_mud(set, j);
    Eigen::MatrixXcd sum = pom.inconclusive_element();
    min_eigen = std::min(
        min_eigen, Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(sum).eigenvalues().minCoeff());
    for (std::size_t k = 0; k < m; ++k) {
      if (k == j) {
        continue;
      }
      const Eigen::MatrixXcd e = pom.conclusive_element(k);
      sum += e;
      min_eigen = std::min(
          min_eigen, Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(e).eigenvalues().minCoeff());
      for (std::size_t l = 0; l < m; ++l) {
        if (l == j) {
          continue;
        }
        const Eigen::VectorXcd s = dense(processed_state(set, j, l));
        const double p = (s.adjoint() * e * s)(0, 0).real();
        if (l == k) {
          success = std::max(success, std::abs(p - pom.conclusive_probability()));
        } else {
          misid = std::max(misid, std::abs(p));
        }
      }
    }
    // Sum of all elements is the projector onto the pyramid span.
    Eigen::MatrixXcd span = Eigen::MatrixXcd::Identity(m, m);
    const Eigen::VectorXcd yes = dense(processed_state(set, j, j));
    span -= yes * yes.adjoint();
    completeness = std::max(completeness, (sum - span).cwiseAbs().maxCoeff());
  }
  const bool ok = misid <= 1e-9 && success <= 1e-9 && completeness <= 1e-9 &&
                  min_eigen >= -1e-9;
  return verdict("measurement.mud_unambiguous", ok,
                 fmt::format("misidentification {:.3g}, success {:.3g}, completeness "
                             "{:.3g}, min eigenvalue {:.3g}",
                             misid, success, completeness, min_eigen));
}

// --- analytics ------------------------------------------------------------

CheckResult analytic_spot_values() {
  struct Spot {
    const char* label;
    double got;
    double want;
  };
  const Spot spots[] = {
      {"G_C(64)", g_classical(64), 32.484375},
      {"G_T(4)", g_teststate(4), 1.0},
      {"G_T(5)", g_teststate(5), 1.8},
      {"G_MUD(8)", g_mud(8), 196.0 / 96.0},
      {"G_Q(4,1)", g_grover(4, 1), 2.0},
  };
  double worst = 0;
  for (const auto& s : spots) {
    worst = std::max(worst, std::abs(s.got - s.want));
  }
  double recur = 0;
  for (std::size_t n = 1; n <= 200; ++n) {
    recur = std::max(recur, std::abs(g_classical(n) - g_classical_recurrence(n)));
  }
  return verdict("analytics.spot_values", worst <= 1e-12 && recur <= 1e-9,
                 fmt::format("max spot deviation {:.3g}, classical recurrence {:.3g}",
                             worst, recur));
}

CheckResult asymptotic_constants() {
  const std::size_t n = std::size_t{1} << 20;
  const double nd = static_cast<double>(n);
  const double gt = g_teststate(n);
  const auto plan = g_grover_opt(n);
  auto rel = [](double got, double want) { return std::abs(got / want - 1); };
  const double r1 = rel(gt / g_classical(n), 1 / 3.41);
  const double r2 = rel(gt * 6.83 / nd, 1);
  const double r3 = rel(g_teststate_fullspace(n) * 6.08 / nd, 1);
  const double r4 = rel(plan.queries / std::sqrt(nd), 0.6900);
  const double r5 = rel(plan.k_opt / std::sqrt(nd), 0.58);
  const double r6 = rel(g_mud(n), nd / 4);
  const double r7 = rel(g_mud_fullspace(n), nd / 3.52);
  const bool ok = r1 <= 0.01 && r2 <= 0.01 && r3 <= 0.01 && r4 <= 0.005 && r5 <= 0.02 &&
                  r6 <= 0.01 && r7 <= 0.01;
  return verdict("analytics.asymptotes_at_2^20", ok,
                 fmt::format("relative errors {:.2g} {:.2g} {:.2g} {:.2g} {:.2g} {:.2g} {:.2g}",
                             r1, r2, r3, r4, r5, r6, r7));
}

CheckResult termination_probabilities() {
  double worst = 0;
  for (std::size_t n : {5, 8, 33}) {
    const auto p = termination_probs(n);
    double total = 0;
    for (double v : p) {
      total += v;
    }
    worst = std::max(worst, std::abs(total - 1));
  }
  return verdict("analytics.termination_probabilities_sum_to_one", worst <= 1e-12,
                 fmt::format("max |sum - 1| = {:.3g}", worst));
}

// --- strategies -----------------------------------------------------------

CheckResult monte_carlo_agreement(const VerifyOptions& o, Strategy s, std::size_t n) {
  const auto stats = estimate({s, n, o.trials, o.seed, 0, o.workers});
  const double g = analytic_queries(s, n);
  const double z = (stats.mean - g) / stats.stderr_mean;
  return verdict(fmt::format("strategies.{}_N{}", strategy_name(s), n), std::abs(z) <= 3,
                 fmt::format("mean {:.6f} +- {:.6f}, analytic {:.6f}, z = {:.2f}", stats.mean,
                             stats.stderr_mean, g, z));
}

CheckResult exact_small_cases(const VerifyOptions& o) {
  const auto t4 = estimate({Strategy::kTestStateRelevant, 4, 1000, o.seed, 0, o.workers});
  const auto q4 = estimate({Strategy::kGroverVerified, 4, 1000, o.seed, 1, o.workers});
  const bool ok = t4.mean == 1.0 && t4.stderr_mean == 0 && q4.mean == 2.0 &&
                  q4.stderr_mean == 0;
  return verdict("strategies.exact_small_cases", ok,
                 fmt::format("teststate_relevant(N=4) {}, grover_verified(N=4,k=1) {}",
                             t4.mean, q4.mean));
}

CheckResult grover_with_verification(const VerifyOptions& o) {
  const std::size_t n = 64;
  const auto stats = estimate({Strategy::kGroverVerified, n, o.trials, o.seed, 0, o.workers});
  const double g = analytic_queries(Strategy::kGroverVerified, n);
  const double tol = std::max(3 * stats.stderr_mean, 0.01 * g);
  return verdict("strategies.grover_verified_N64", std::abs(stats.mean - g) <= tol,
                 fmt::format("mean {:.6f}, analytic {:.6f}, tolerance {:.4f}", stats.mean, g,
                             tol));
}

CheckResult relevant_round_bound(const VerifyOptions& o) {
  std::size_t worst_excess = 0;
  bool correct = true;
  for (std::size_t n : {5, 8, 16}) {
    for (std::uint64_t t = 0; t < 2000; ++t) {
      Rng rng = Rng::for_trial(o.seed, t);
      BlackBox box(n, rng.below(n));
      const auto tr = run_teststate_relevant(box, rng);
      correct = correct && tr.found == box.reveal_for_testing();
      if (tr.queries > n - 3) {
        worst_excess = std::max<std::size_t>(worst_excess, tr.queries - (n - 3));
      }
    }
  }
  return verdict("strategies.relevant_rounds_at_most_N-3", correct && worst_excess == 0,
                 fmt::format("max rounds above N-3: {}", worst_excess));
}

CheckResult pair_verification_exact() {
  std::size_t mismatches = 0;
  for (int n : {2, 3, 4}) {
    const std::size_t dim = std::size_t{1} << n;
    for (std::size_t h = 0; h < dim; ++h) {
      for (std::size_t j = 0; j < dim; ++j) {
        BlackBox box(dim, h);
        const auto v = run_appendixA_verify(box, j);
        if (v.is_claimed != (h == j) || box.queries() != std::uint64_t(v.queries)) {
          ++mismatches;
        }
      }
    }
  }
  return verdict("strategies.pair_verification_exact", mismatches == 0,
                 fmt::format("{} mismatches", mismatches));
}

CheckResult determinism(const VerifyOptions& o) {
  const std::uint64_t trials = std::min<std::uint64_t>(o.trials, 20000);
  bool same = true;
  for (Strategy s : {Strategy::kClassical, Strategy::kTestStateFull, Strategy::kMudRelevant}) {
    const auto a = estimate({s, 16, trials, o.seed, 0, 1});
    const auto b = estimate({s, 16, trials, o.seed, 0, 1});
    const auto c = estimate({s, 16, trials, o.seed, 0, 4});
    same = same && std::bit_cast<std::uint64_t>(a.mean) == std::bit_cast<std::uint64_t>(b.mean) &&
           std::bit_cast<std::uint64_t>(a.mean) == std::bit_cast<std::uint64_t>(c.mean) &&
           std::bit_cast<std::uint64_t>(a.stderr_mean) ==
               std::bit_cast<std::uint64_t>(c.stderr_mean);
  }
  return verdict("strategies.deterministic_across_workers", same,
                 same ? "bit-identical" : "aggregates differ");
}

// --- circuits -------------------------------------------------------------

CheckResult prep_fidelity() {
  double worst = 0;
  for (int n : {2, 3, 4, 5}) {
    const std::size_t dim = std::size_t{1} << n;
    const Circuit c = compile_teststate_prep(n);
    const Ket out = simulate(c, basis_ket(dim, 0));
    worst = std::max(worst, 1 - fidelity(out, test_state(CandidateSet::full(dim), 0)));
  }
  for (std::size_t j = 0; j < 8; ++j) {
    const Ket out = simulate(localize_teststate(compile_teststate_prep(3), j), basis_ket(8, 0));
    worst = std::max(worst, 1 - fidelity(out, test_state(CandidateSet::full(8), j)));
  }
  const bool five = compile_teststate_prep(3).gates().size() == 5;
  return verdict("circuits.prep_fidelity", worst <= kTolerance && five,
                 fmt::format("max infidelity {:.3g}", worst));
}

CheckResult srm_circuit() {
  double diag = 0;
  double eig = 0;
  for (int n : {3, 4}) {
    const std::size_t dim = std::size_t{1} << n;
    const Eigen::MatrixXcd m = implemented_operator(compile_srm_unitary(n));
    const auto basis = srm_basis(CandidateSet::full(dim), 0);
    for (std::size_t l = 0; l < dim; ++l) {
      diag = std::max(diag, std::abs(std::abs((m * dense(basis[l]))(l)) - 1));
    }
    const auto [a, b, size] = test_amplitudes(dim);
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(dim);
    v(0) = 0;
    Eigen::VectorXcd e0 = b / std::sqrt(2 * (1 - a)) * v;
    e0(0) = std::sqrt((1 - a) / 2);
    Eigen::VectorXcd e1 = b / std::sqrt(2 * (1 + a)) * v;
    e1(0) = -std::sqrt((1 + a) / 2);
    eig = std::max(eig, (m * e0 - e0).cwiseAbs().maxCoeff());
    eig = std::max(eig, (m * e1 + e1).cwiseAbs().maxCoeff());
    for (std::size_t j = 2; j < dim; ++j) {
      Eigen::VectorXcd ej = Eigen::VectorXcd::Zero(dim);
      ej(1) = -1 / std::sqrt(2.0);
      ej(j) = 1 / std::sqrt(2.0);
      eig = std::max(eig, (m * ej + ej).cwiseAbs().maxCoeff());
    }
  }
  return verdict("circuits.srm_unitary", diag <= 1e-9 && eig <= 1e-9,
                 fmt::format("|<l|M|T_0^l>| deviation {:.3g}, eigen-action {:.3g}", diag, eig));
}

CheckResult srm_circuit_sampling() {
  const int n = 4;
  const std::size_t dim = 16;
  const std::size_t shots = 100000;
  const CandidateSet set = CandidateSet::full(dim);
  const Circuit c = compile_srm_unitary(n);
  const Srm srm(set, 0);
  Rng rng(1234);
  double worst_chi2 = 0;
  for (std::size_t k : {0, 5}) {
    const Ket s = processed_state(set, 0, k);
    const Ket out = simulate(c, s);
    const auto p = srm.outcome_probabilities(s);
    std::vector<std::size_t> counts(dim, 0);
    for (std::size_t i = 0; i < shots; ++i) {
      ++counts[sample_index(out, rng)];
    }
    double chi2 = 0;
    for (std::size_t l = 0; l < dim; ++l) {
      const double expected = p[l] * shots;
      if (expected > 0) {
        chi2 += (counts[l] - expected) * (counts[l] - expected) / expected;
      } else if (counts[l] > 0) {
        chi2 = INFINITY;
      }
    }
    worst_chi2 = std::max(worst_chi2, chi2);
  }
  // 15 degrees of freedom: mean 15, standard deviation sqrt(30).
  const double limit = 15 + 3 * std::sqrt(30.0);
  return verdict("circuits.srm_sampling_matches_measurement", worst_chi2 <= limit,
                 fmt::format("chi2 {:.2f} (limit {:.2f})", worst_chi2, limit));
}

CheckResult appendix_a_truth_table() {
  std::size_t mismatches = 0;
  for (int n : {3, 4}) {
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t flip = QubitIndex(1).mask(n);
    for (std::size_t j = 0; j < dim; ++j) {
      const Circuit c = compile_appendixA(n, j, 1);
      for (std::size_t h = 0; h < dim; ++h) {
        const Ket out = simulate(c, basis_ket(dim, 0),
                                 [h](Ket s) { return apply_oracle(h, std::move(s)); });
        const bool reads_one = qubit_probability(out, QubitIndex(1), 1) > 1 - kTolerance;
        const bool reads_zero = qubit_probability(out, QubitIndex(1), 0) > 1 - kTolerance;
        const bool in_pair = h == j || h == (j ^ flip);
        if (in_pair ? !reads_one : !reads_zero) {
          ++mismatches;
        }
      }
    }
  }
  return verdict("circuits.appendix_a_truth_table", mismatches == 0,
                 fmt::format("{} mismatches", mismatches));
}

CheckResult appendix_b() {
  double worst = 0;
  const std::size_t runs = 100000;
  std::size_t ones = 0;
  bool both_seen = true;
  for (int n : {2, 3, 4}) {
    const Ket target = complex_test_state(n);
    bool seen[2] = {false, false};
    Rng rng(77 + n);
    const std::size_t count = n == 3 ? runs : 200;
    for (std::size_t i = 0; i < count; ++i) {
      const auto r = prepare_appendixB(n, rng);
      seen[r.ancilla_bit] = true;
      worst = std::max(worst, 1 - fidelity(r.state, target));
      if (n == 3) {
        ones += r.ancilla_bit;
      }
    }
    both_seen = both_seen && seen[0] && seen[1];
  }
  const double sigma = std::sqrt(0.25 / runs);
  const double freq = static_cast<double>(ones) / runs;
  const bool pi_at_4 = std::abs(appendix_b_angle(4) - std::numbers::pi) <= kTolerance;
  const bool ok = worst <= kTolerance && both_seen && std::abs(freq - 0.5) <= 3 * sigma && pi_at_4;
  return verdict("circuits.appendix_b", ok,
                 fmt::format("max infidelity {:.3g}, P(m=1) = {:.4f}, theta(4) = {:.17g}", worst,
                             freq, appendix_b_angle(4)));
}

CheckResult export_round_trip() {
  Rng rng(3);
  bool same = true;
  for (const Circuit& c : {compile_teststate_prep(4), compile_srm_unitary(3),
                           compile_appendixB_graph(3)}) {
    const Circuit back = import_circuit(export_circuit(c));
    same = same && back == c;
    if (!c.has_ancilla()) {
      const Ket in = random_ket(c.dim(), rng);
      const Ket u = simulate(c, in);
      const Ket v = simulate(back, in);
      for (std::size_t i = 0; i < c.dim(); ++i) {
        same = same && u[i] == v[i];
      }
    }
  }
  return verdict("circuits.export_round_trip", same, same ? "identical" : "differs");
}

CheckResult circuits_unitary() {
  Rng rng(9);
  double worst = 0;
  for (int n : {2, 3, 4, 5}) {
    for (const Circuit& c : {compile_teststate_prep(n), compile_srm_unitary(n)}) {
      const Ket out = simulate(c, random_ket(c.dim(), rng));
      worst = std::max(worst, std::abs(out.norm_squared() - 1));
    }
  }
  return verdict("circuits.norm_preserved", worst <= kTolerance,
                 fmt::format("max |norm^2 - 1| = {:.3g}", worst));
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(
    const VerifyOptions& options, const std::function<void(const CheckResult&)>& on_result) {
  std::vector<Check> checks = {
      gates_preserve_norm,
      grover_probability,
      pyramid_overlaps,
      wrong_guess_orthogonal_to_yes,
      srm_structure,
      srm_structured_matches_dense,
      mud_is_unambiguous,
      analytic_spot_values,
      asymptotic_constants,
      termination_probabilities,
      prep_fidelity,
      circuits_unitary,
      srm_circuit,
      srm_circuit_sampling,
      appendix_a_truth_table,
      appendix_b,
      export_round_trip,
      pair_verification_exact,
      [&] { return exact_small_cases(options); },
      [&] { return relevant_round_bound(options); },
  };
  for (Strategy s : {Strategy::kClassical, Strategy::kTestStateRelevant, Strategy::kTestStateFull,
                     Strategy::kMudRelevant, Strategy::kMudFull}) {
    for (std::size_t n : {8, 16, 32, 64}) {
      checks.push_back([&options, s, n] { return monte_carlo_agreement(options, s, n); });
    }
  }
  checks.push_back([&] { return grover_with_verification(options); });
  checks.push_back([&] { return determinism(options); });

  std::vector<CheckResult> results;
  for (const auto& check : checks) {
    CheckResult r;
    try {
      r = check();
    } catch (const std::exception& e) {
      r = verdict("check", false, fmt::format("threw: {}", e.what()));
    }
    if (on_result) {
      on_result(r);
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace qsearch
