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

#include "qsearch/cli.hpp"

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include "json.hpp"
#include "qsearch/analytics.hpp"
#include "qsearch/circuits.hpp"
#include "qsearch/strategies.hpp"
#include "qsearch/verify.hpp"

namespace qsearch::cli {

namespace {

using json = nlohmann::ordered_json;

int fail(int code, const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return code;
}

int emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return std::cout ? kExitOk : fail(kExitIo, "cannot write to stdout");
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    return fail(kExitIo, "cannot open " + path + " for writing");
  }
  file << text;
  file.close();
  return file ? kExitOk : fail(kExitIo, "write to " + path + " failed");
}

std::string number(double v) { return fmt::format("{:.17g}", v); }

std::string cell(const std::optional<double>& v) { return v ? number(*v) : std::string(); }

json json_number(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) {
    return nullptr;
  }
  return *v;
}

std::optional<double> defined_from(std::size_t n, std::size_t n_min, double (*g)(std::size_t)) {
  if (n < n_min) {
    return std::nullopt;
  }
  return g(n);
}

}  // namespace

int statistical_exit_code(double z_score) {
  return std::abs(z_score) <= 3 ? kExitOk : kExitStatistical;
}

std::string analytic_table(std::size_t n_min, std::size_t n_max, std::size_t step,
                           Format format) {
  if (n_min < 4 || n_max < n_min || step == 0) {
    throw std::invalid_argument(
        fmt::format("invalid range: need 4 <= n <= n-max and step >= 1 (got {}..{} step {})",
                    n_min, n_max, step));
  }
  const Figure1 fig = figure1_curves(n_min, n_max, step);
  std::string csv = std::string(kAnalyticHeader) + "\n";
  json rows = json::array();
  for (std::size_t i = 0; i < fig.classical.points.size(); ++i) {
    const std::size_t n = fig.classical.points[i].n;
    const int k_opt = g_grover_opt(n).k_opt;
    const double gc = fig.classical.points[i].queries;
    const double gt = fig.teststate.points[i].queries;
    const double gq = fig.grover.points[i].queries;
    const auto gt_full = defined_from(n, 5, g_teststate_fullspace);
    const auto g_mud_rel = defined_from(n, 5, g_mud);
    const auto g_mud_full = defined_from(n, 5, g_mud_fullspace);
    if (format == Format::kCsv) {
      csv += fmt::format("{},{},{},{},{},{},{},{}\n", n, number(gc), number(gt), cell(gt_full),
                         number(gq), k_opt, cell(g_mud_rel), cell(g_mud_full));
    } else {
      rows.push_back({{"N", n},
                      {"G_C", gc},
                      {"G_T", gt},
                      {"G_T_full", json_number(gt_full)},
                      {"G_Q", gq},
                      {"k_opt", k_opt},
                      {"G_MUD", json_number(g_mud_rel)},
                      {"G_MUD_full", json_number(g_mud_full)}});
    }
  }
  return format == Format::kCsv ? csv : rows.dump(2) + "\n";
}

int cmd_analytic(const RunConfig& config) {
  std::string text;
  try {
    text = analytic_table(config.n, config.n_max.value_or(config.n), config.step, config.format);
  } catch (const std::exception& e) {
    return fail(kExitUsage, e.what());
  }
  return emit(config.out, text);
}

int cmd_montecarlo(const RunConfig& config) {
  const auto strategy = parse_strategy(config.strategy);
  if (!strategy) {
    return fail(kExitUsage, "unknown strategy '" + config.strategy + "'");
  }
  if (!config.seed) {
    return fail(kExitUsage, "--seed is required for Monte Carlo runs");
  }
  if (config.trials < 1) {
    return fail(kExitUsage, "--trials must be at least 1");
  }
  const std::size_t min_n = minimum_dimension(*strategy);
  if (config.n < min_n) {
    return fail(kExitUsage, fmt::format("{} requires N >= {} (got N = {})",
                                        strategy_name(*strategy), min_n, config.n));
  }
  if (config.k < 0) {
    return fail(kExitUsage, "--k must be non-negative");
  }

  StrategyStats stats;
  double analytic = 0;
  try {
    stats = estimate({*strategy, config.n, config.trials, *config.seed, config.k,
                      config.workers});
    analytic = analytic_queries(*strategy, config.n, config.k);
  } catch (const std::invalid_argument& e) {
    return fail(kExitUsage, e.what());
  } catch (const std::domain_error& e) {
    return fail(kExitUsage, e.what());
  }

  double z = 0;
  if (stats.stderr_mean > 0) {
    z = (stats.mean - analytic) / stats.stderr_mean;
  } else if (std::abs(stats.mean - analytic) > 1e-12) {
    z = stats.mean > analytic ? INFINITY : -INFINITY;
  }

  std::string text;
  if (config.format == Format::kCsv) {
    text = fmt::format("strategy,N,trials,seed,mean,stderr,analytic,z_score\n{},{},{},{},{},{},{},{}\n",
                       strategy_name(*strategy), stats.n, stats.trials, stats.seed,
                       number(stats.mean), number(stats.stderr_mean), number(analytic),
                       number(z));
  } else {
    json record = {{"strategy", std::string(strategy_name(*strategy))},
                   {"N", stats.n},
                   {"trials", stats.trials},
                   {"seed", stats.seed},
                   {"mean", stats.mean},
                   {"stderr", stats.stderr_mean},
                   {"analytic", analytic},
                   {"z_score", json_number(z)}};
    text = record.dump(2) + "\n";
  }
  if (const int rc = emit(config.out, text); rc != kExitOk) {
    return rc;
  }
  if (statistical_exit_code(z) != kExitOk) {
    std::cerr << fmt::format("statistical check failed: |z| = {} > 3\n", std::abs(z));
  }
  return statistical_exit_code(z);
}

int cmd_circuit(const RunConfig& config) {
  if (config.n < 2 || config.n > 30) {
    return fail(kExitUsage, fmt::format("circuit width n must be in [2, 30] (got {})", config.n));
  }
  const int n = static_cast<int>(config.n);
  std::optional<Circuit> circuit;
  try {
    if (config.circuit_kind == "prep") {
      circuit = compile_teststate_prep(n);
    } else if (config.circuit_kind == "srm") {
      circuit = compile_srm_unitary(n);
    } else if (config.circuit_kind == "appendixA") {
      circuit = compile_appendixA(n, config.j, 1);
    } else if (config.circuit_kind == "appendixB") {
      circuit = compile_appendixB_graph(n);
    } else {
      return fail(kExitUsage, "unknown circuit kind '" + config.circuit_kind +
                                  "' (expected prep, srm, appendixA or appendixB)");
    }
  } catch (const std::exception& e) {
    return fail(kExitUsage, e.what());
  }
  return emit(config.out, export_circuit(*circuit));
}

int cmd_verify(const RunConfig& config) {
  VerifyOptions options;
  options.trials = config.trials;
  options.seed = config.seed.value_or(options.seed);
  options.workers = config.workers;
  bool all = true;
  run_invariant_suite(options, [&all](const CheckResult& r) {
    all = all && r.passed;
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << std::endl;
  });
  return all ? kExitOk : kExitStatistical;
}

}  // namespace qsearch::cli
