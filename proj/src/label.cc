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

#include "hypobias/label.h"

#include "hypobias/string_util.h"

namespace hypobias {

std::string_view LabelName(Label label) {
  switch (label) {
    case Label::kEntailment:
      return "entailment";
    case Label::kNeutral:
      return "neutral";
    case Label::kContradiction:
      return "contradiction";
  }
  return "unknown";
}

std::string_view LabelDisplayName(Label label) {
  switch (label) {
    case Label::kEntailment:
      return "Entailment";
    case Label::kNeutral:
      return "Neutral";
    case Label::kContradiction:
      return "Contradiction";
  }
  return "Unknown";
}

std::optional<Label> ParseLabel(std::string_view text) {
  for (Label label : kAllLabels) {
    if (EqualsIgnoreCase(text, LabelName(label))) return label;
  }
  return std::nullopt;
}

}  // namespace hypobias
