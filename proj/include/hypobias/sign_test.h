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

#ifndef HYPOBIAS_SIGN_TEST_H_
#define HYPOBIAS_SIGN_TEST_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"

namespace hypobias {

struct SignTestResult {
  std::uint64_t n_plus = 0;   // A correct, B wrong
  std::uint64_t n_minus = 0;  // B correct, A wrong
  std::uint64_t n_tie = 0;
  // Exact two-sided p-value; may underflow to 0, in which case log10_p
  // still carries the magnitude.
  double p_two_sided = 1.0;
  double log10_p = 0.0;

  friend bool operator==(const SignTestResult&,
                         const SignTestResult&) = default;
};

// Natural log of P[X <= k] for X ~ Binomial(n, 1/2). Summed from log-gamma
// binomial terms with log-sum-exp, so it stays finite far below the
// smallest positive double.
absl::StatusOr<double> LogBinomCdf(std::uint64_t k, std::uint64_t n);

// Paired two-sided sign test on per-example correctness. Ties are discarded
// and p = min(1, 2 * P[X <= min(n_plus, n_minus)]).
absl::StatusOr<SignTestResult> SignTest(const std::vector<bool>& correct_a,
                                        const std::vector<bool>& correct_b);

// Same test from discordant counts directly.
SignTestResult SignTestFromCounts(std::uint64_t n_plus, std::uint64_t n_minus,
                                  std::uint64_t n_tie);

}  // namespace hypobias

#endif  // HYPOBIAS_SIGN_TEST_H_
