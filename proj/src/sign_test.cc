//
// Copyright 2026 The Hypobias Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "hypobias/sign_test.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hypobias/string_util.h"

namespace hypobias {
namespace {

double LogChoose(std::uint64_t n, std::uint64_t k) {
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

}  // namespace

absl::StatusOr<double> LogBinomCdf(std::uint64_t k, std::uint64_t n) {
  if (k > n) {
    return absl::InvalidArgumentError(
        StrCat("binomial CDF needs k <= n, got k=", k, " n=", n));
  }
  if (k == n) return 0.0;
  const double log_half_n = -static_cast<double>(n) * std::numbers::ln2;
  // Terms grow with i up to n/2, so the largest term is at min(k, n/2).
  const double peak = LogChoose(n, std::min(k, n / 2));
  double sum = 0.0;
  for (std::uint64_t i = 0; i <= k; ++i) {
    sum += std::exp(LogChoose(n, i) - peak);
  }
  return std::min(0.0, peak + std::log(sum) + log_half_n);
}

SignTestResult SignTestFromCounts(std::uint64_t n_plus, std::uint64_t n_minus,
                                  std::uint64_t n_tie) {
  SignTestResult result{.n_plus = n_plus, .n_minus = n_minus, .n_tie = n_tie};
  const std::uint64_t n = n_plus + n_minus;
  if (n == 0) return result;
  const double log_cdf = *LogBinomCdf(std::min(n_plus, n_minus), n);
  const double log_p = std::min(0.0, std::numbers::ln2 + log_cdf);
  result.p_two_sided = std::exp(log_p);
  result.log10_p = log_p / std::numbers::ln10;
  return result;
}

absl::StatusOr<SignTestResult> SignTest(const std::vector<bool>& correct_a,
                                        const std::vector<bool>& correct_b) {
  if (correct_a.size() != correct_b.size()) {
    return absl::InvalidArgumentError(
        StrCat("sign test needs paired sequences, got lengths ",
               correct_a.size(), " and ", correct_b.size()));
  }
  std::uint64_t plus = 0, minus = 0, tie = 0;
  for (std::size_t i = 0; i < correct_a.size(); ++i) {
    if (correct_a[i] == correct_b[i]) {
      ++tie;
    } else if (correct_a[i]) {
      ++plus;
    } else {
      ++minus;
    }
  }
  return SignTestFromCounts(plus, minus, tie);
}

}  // namespace hypobias
