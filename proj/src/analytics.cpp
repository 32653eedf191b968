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

#include <cmath>
#include <stdexcept>
#include <string>

#include "qsearch/oracle.hpp"

namespace qsearch {

namespace analytics_detail {

double smallest_root_of_tan_equals_2x() {
  // Newton on f(x) = tan x - 2x from inside (0, pi/2), where f is convex.
  double x = 1.2;
  for (int i = 0; i < 50; ++i) {
    const double t = std::tan(x);
    const double step = (t - 2 * x) / (1 + t * t - 2);
    x -= step;
    if (std::abs(step) < 1e-16) {
      break;
    }
  }
  return x;
}

}  // namespace analytics_detail

namespace {

void require_at_least(std::size_t n, std::size_t minimum, const char* what) {
  if (n < minimum) {
    throw std::domain_error(std::string(what) + ": requires N >= " +
                            std::to_string(minimum) + ", got " +
                            std::to_string(n));
  }
}

// x^e, in log space for large exponents.
double power(double x, double e) {
  if (e > 1e4 && x > 0) {
    return std::exp(e * std::log(x));
  }
  return std::pow(x, e);
}

double advance_teststate(double g, std::size_t m,
                         const ConditionalProbabilities& ab) {
  const double md = static_cast<double>(m);
  return 1 + md / (md + 1) * (ab.alpha - ab.beta) +
         md * md * ab.beta / (md + 1) * g;
}

}  // namespace

double g_classical(std::size_t n) {
  require_at_least(n, 1, "g_classical");
  const double nd = static_cast<double>(n);
  return (nd + 1) / 2 - 1 / nd;
}

double g_classical_recurrence(std::size_t n) {
  require_at_least(n, 1, "g_classical_recurrence");
  double g = 0;
  for (std::size_t m = 1; m < n; ++m) {
    const double md = static_cast<double>(m);
    g = 1 + md / (md + 1) * g;
  }
  return g;
}

double g_teststate(std::size_t n) {
  return g_teststate_with(n, alpha_beta);
}

double g_teststate_with(
    std::size_t n,
    const std::function<ConditionalProbabilities(std::size_t)>& probabilities) {
  require_at_least(n, 4, "g_teststate");
  double g = 1;
  for (std::size_t m = 4; m < n; ++m) {
    g = advance_teststate(g, m, probabilities(m));
  }
  return g;
}

std::vector<double> termination_probs(std::size_t n) {
  require_at_least(n, 5, "termination_probs");
  const double nd = static_cast<double>(n);
  std::vector<double> p(n - 3);
  p[0] = 1 / nd;
  double survive = (nd - 1) / nd;
  // Round m guesses the pointer of round m-1, whose measurement had
  // N - m + 1 "no" outcomes.
  for (std::size_t m = 2; m + 3 < n; ++m) {
    const double alpha = alpha_beta(n - m + 1).alpha;
    p[m - 1] = survive * alpha;
    survive *= 1 - alpha;
  }
  p[n - 4] = survive;
  return p;
}

double g_teststate_fullspace(std::size_t n) {
  require_at_least(n, 5, "g_teststate_fullspace");
  const double nd = static_cast<double>(n);
  const double x = (nd - 1) * alpha_beta(n - 1).beta;
  const double one_minus = 1 - x;
  return (2 - x) / one_minus -
         (1 - power(x, nd)) / (nd * one_minus * one_minus) -
         power(x, nd - 2) / nd;
}

double g_grover(std::size_t n, int k) {
  require_at_least(n, 4, "g_grover");
  if (k < 1) {
    throw std::domain_error("g_grover: need k >= 1");
  }
  const double p = GroverParams::make(n, k).success_probability();
  const double nd = static_cast<double>(n);
  return k / p + (nd - p) / (1 + (nd - 2) * p);
}

GroverPlan g_grover_opt(std::size_t n) {
  require_at_least(n, 4, "g_grover_opt");
  const int k_max =
      static_cast<int>(std::ceil(2 * std::sqrt(static_cast<double>(n))));
  GroverPlan best{n, 1, g_grover(n, 1)};
  for (int k = 2; k <= k_max; ++k) {
    const double g = g_grover(n, k);
    if (g < best.queries) {
      best = {n, k, g};
    }
  }
  return best;
}

double g_mud(std::size_t n) {
  require_at_least(n, 5, "g_mud");
  const double nd = static_cast<double>(n);
  return (nd - 1) * (3 * nd + 4) / (12 * nd);
}

double g_mud_fullspace(std::size_t n) {
  require_at_least(n, 5, "g_mud_fullspace");
  const double nd = static_cast<double>(n);
  const double x = (nd - 4) / (nd - 2);
  const double one_minus = 1 - x;
  return 1 / one_minus -
         (x - power(x, nd + 1)) / (nd * one_minus * one_minus) -
         power(x, nd - 1) / nd;
}

Figure1 figure1_curves(std::size_t n_min, std::size_t n_max, std::size_t step) {
  if (n_min < 4 || n_min > n_max || step == 0) {
    throw std::invalid_argument(
        "figure1_curves: need 4 <= n_min <= n_max and a positive step");
  }
  Figure1 fig{{"classical", {}}, {"grover-opt", {}}, {"test-state", {}}};
  double gt = 1;
  std::size_t gt_at = 4;
  for (std::size_t n = n_min; n <= n_max; n += step) {
    for (; gt_at < n; ++gt_at) {
      gt = advance_teststate(gt, gt_at, alpha_beta(gt_at));
    }
    fig.classical.points.push_back({n, g_classical(n)});
    fig.grover.points.push_back({n, g_grover_opt(n).queries});
    fig.teststate.points.push_back({n, gt});
  }
  return fig;
}

}  // namespace qsearch
