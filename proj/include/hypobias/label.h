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

#ifndef HYPOBIAS_LABEL_H_
#define HYPOBIAS_LABEL_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace hypobias {

// Three-way entailment label. The enumerator values are the canonical
// ordinal order used for every deterministic tie-break in the toolkit.
enum class Label : int {
  kEntailment = 0,
  kNeutral = 1,
  kContradiction = 2,
};

inline constexpr std::size_t kNumLabels = 3;

inline constexpr std::array<Label, kNumLabels> kAllLabels = {
    Label::kEntailment, Label::kNeutral, Label::kContradiction};

// Per-label storage indexed by LabelIndex().
template <typename T>
using PerLabel = std::array<T, kNumLabels>;

constexpr std::size_t LabelIndex(Label label) {
  return static_cast<std::size_t>(label);
}

// Lowercase name: "entailment", "neutral" or "contradiction".
std::string_view LabelName(Label label);

// Capitalized name used in tables: "Entailment", ...
std::string_view LabelDisplayName(Label label);

// Case-insensitive parse of the three label names. Anything else, including
// the SNLI no-consensus marker "-", yields nullopt.
std::optional<Label> ParseLabel(std::string_view text);

}  // namespace hypobias

#endif  // HYPOBIAS_LABEL_H_
