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
#include <string>

namespace qsearch::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitIo = 2,
  kExitStatistical = 3,
};

enum class Format { kCsv, kJson };

struct RunConfig {
  std::size_t n = 4;
  std::optional<std::size_t> n_max;  // analytic range end; defaults to n
  std::size_t step = 1;
  std::string strategy;
  std::uint64_t trials = 100000;
  std::optional<std::uint64_t> seed;  // required for Monte Carlo runs
  int k = 0;                          // Grover cycle length, 0 = optimum
  Format format = Format::kCsv;
  std::string out;  // empty or "-" writes to stdout
  std::string circuit_kind;
  std::size_t j = 0;  // claimed index for the pair-verification circuit
  unsigned workers = 1;
};

/// Fixed header of the analytic table.
inline constexpr const char* kAnalyticHeader =
    "N,G_C,G_T,G_T_full,G_Q,k_opt,G_MUD,G_MUD_full";

/// Each command reports problems on stderr and returns an ExitCode.
int cmd_analytic(const RunConfig& config);
int cmd_montecarlo(const RunConfig& config);
int cmd_circuit(const RunConfig& config);
int cmd_verify(const RunConfig& config);

/// kExitOk when |z| <= 3, else kExitStatistical (also for NaN).
int statistical_exit_code(double z_score);

/// Text produced by the commands, exposed for tests.
std::string analytic_table(std::size_t n_min, std::size_t n_max, std::size_t step,
                           Format format);

}  // namespace qsearch::cli
