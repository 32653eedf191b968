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

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "qsearch/cli.hpp"

namespace {

using qsearch::cli::Format;
using qsearch::cli::RunConfig;

void add_format(CLI::App* cmd, Format& format) {
  const std::map<std::string, Format> formats{{"csv", Format::kCsv}, {"json", Format::kJson}};
  cmd->add_option("--format", format, "Output format: csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

void add_out(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--out", config.out, "Output file (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oracle identification by test-state queries: analytics, Monte Carlo, circuits"};
  app.require_subcommand(1);
  RunConfig config;
  Format analytic_format = Format::kCsv;
  Format montecarlo_format = Format::kJson;

  auto* analytic = app.add_subcommand("analytic", "Tabulate expected query counts over a range of N");
  analytic->add_option("--n", config.n, "First N (>= 4)")->required();
  analytic->add_option("--n-max", config.n_max, "Last N (default: --n)");
  analytic->add_option("--step", config.step, "Stride in N");
  add_format(analytic, analytic_format);
  add_out(analytic, config);

  auto* montecarlo = app.add_subcommand("montecarlo", "Simulate a search strategy and compare with its closed form");
  montecarlo->add_option("--strategy", config.strategy,
                         "classical, teststate_relevant, teststate_full, mud_relevant, "
                         "mud_full or grover_verified")
      ->required();
  montecarlo->add_option("--n", config.n, "Number of index kets N")->required();
  montecarlo->add_option("--trials", config.trials, "Number of trials")
      ->check(CLI::PositiveNumber);
  montecarlo->add_option("--seed", config.seed, "Random seed")->required();
  montecarlo->add_option("--k", config.k, "Grover cycle length (default: optimal)");
  montecarlo->add_option("--workers", config.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  add_format(montecarlo, montecarlo_format);
  add_out(montecarlo, config);

  auto* circuit = app.add_subcommand("circuit", "Export a compiled circuit as JSON");
  circuit->add_option("kind", config.circuit_kind, "prep, srm, appendixA or appendixB")
      ->required();
  circuit->add_option("--n", config.n, "Number of data qubits (>= 2)")->required();
  circuit->add_option("--j", config.j, "Claimed index for appendixA");
  add_out(circuit, config);

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--trials", config.trials, "Trials per Monte Carlo check")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", config.seed, "Random seed");
  verify->add_option("--workers", config.workers, "Worker threads")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return qsearch::cli::kExitUsage;
  }

  if (*analytic) {
    config.format = analytic_format;
    return qsearch::cli::cmd_analytic(config);
  }
  if (*montecarlo) {
    config.format = montecarlo_format;
    return qsearch::cli::cmd_montecarlo(config);
  }
  if (*circuit) {
    return qsearch::cli::cmd_circuit(config);
  }
  return qsearch::cli::cmd_verify(config);
}
