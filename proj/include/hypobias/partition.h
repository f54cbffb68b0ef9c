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

#ifndef HYPOBIAS_PARTITION_H_
#define HYPOBIAS_PARTITION_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "hypobias/corpus.h"
#include "hypobias/naive_bayes.h"

namespace hypobias {

inline constexpr std::string_view kDefaultUnkSymbol = "<unk>";

struct SubsetCounts {
  std::size_t easy = 0;
  std::size_t hard = 0;

  friend bool operator==(const SubsetCounts&, const SubsetCounts&) = default;
};

// Empirical easy/hard split of a test set. A pair is easy iff the
// hypothesis-only classifier labels it correctly.
struct PartitionManifest {
  std::vector<std::string> easy_ids;
  std::vector<std::string> hard_ids;
  PerLabel<SubsetCounts> per_label_breakdown{};

  std::size_t total() const { return easy_ids.size() + hard_ids.size(); }
  double easy_ratio() const;

  friend bool operator==(const PartitionManifest&,
                         const PartitionManifest&) = default;
};

// `predictions[i]` is the prediction for `test.pairs[i]`; sizes must match.
PartitionManifest PartitionByPredictions(const CorpusSplit& test,
                                         const std::vector<Label>& predictions);

PartitionManifest PartitionEasyHard(const NbModel& model,
                                    const CorpusSplit& test);

// Replaces every premise with as many copies of `unk_symbol` as it has
// tokens, joined by single spaces. The symbol must tokenize to itself, so
// that masking is idempotent.
absl::StatusOr<CorpusSplit> MaskPremises(
    const CorpusSplit& split, std::string_view unk_symbol = kDefaultUnkSymbol);

// Manifest text: "#easy", one id per line, "#hard", one id per line.
absl::StatusOr<std::string> FormatManifest(const PartitionManifest& manifest);
absl::Status ExportManifest(const PartitionManifest& manifest,
                            const std::string& path);

// The manifest file stores ids only; the per-label breakdown of the result
// is zero until FillBreakdown() is called.
absl::StatusOr<PartitionManifest> ParseManifest(std::string_view text);
absl::StatusOr<PartitionManifest> ReadManifest(const std::string& path);

// Recomputes the breakdown from gold labels. Fails if the manifest ids do
// not cover `test` exactly.
absl::Status FillBreakdown(const CorpusSplit& test,
                           PartitionManifest* manifest);

}  // namespace hypobias

#endif  // HYPOBIAS_PARTITION_H_
