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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qsearch {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t trials = 100000;  // per Monte Carlo check
  std::uint64_t seed = 20260415;
  unsigned workers = 1;
};

/// Runs every module property check in a fixed order. `on_result`, when set,
/// sees each result as soon as it is available.
std::vector<CheckResult> run_invariant_suite(
    const VerifyOptions& options,
    const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace qsearch
