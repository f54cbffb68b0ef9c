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

#ifndef HYPOBIAS_CORPUS_H_
#define HYPOBIAS_CORPUS_H_

#include <array>
#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "hypobias/label.h"

namespace hypobias {

enum class SplitName : int { kTrain = 0, kDev = 1, kTest = 2 };

inline constexpr std::array<SplitName, 3> kAllSplits = {
    SplitName::kTrain, SplitName::kDev, SplitName::kTest};

std::string_view SplitNameString(SplitName split);

enum class SourceFormat { kSnliJsonl, kSickTsv, kGenericJsonl };

std::string_view SourceFormatString(SourceFormat format);

struct SentencePair {
  std::string id;
  std::string premise;
  std::string hypothesis;
  Label label;

  friend bool operator==(const SentencePair&, const SentencePair&) = default;
};

// Pairs are kept in source-file order.
struct CorpusSplit {
  SplitName name = SplitName::kTrain;
  std::vector<SentencePair> pairs;

  bool empty() const { return pairs.empty(); }
  std::size_t size() const { return pairs.size(); }

  friend bool operator==(const CorpusSplit&, const CorpusSplit&) = default;
};

struct Corpus {
  CorpusSplit train{SplitName::kTrain, {}};
  CorpusSplit dev{SplitName::kDev, {}};
  CorpusSplit test{SplitName::kTest, {}};
  SourceFormat source_format = SourceFormat::kGenericJsonl;

  const CorpusSplit& split(SplitName name) const;
  CorpusSplit& split(SplitName name);
};

struct SnliLoadResult {
  CorpusSplit split;
  // Records dropped because their gold_label was "-".
  std::size_t excluded = 0;
  // Non-blank input lines; always split.size() + excluded.
  std::size_t raw_lines = 0;
};

// SNLI JSONL: one object per line with string keys gold_label, sentence1,
// sentence2 and pairID. Records without annotator consensus are dropped.
absl::StatusOr<SnliLoadResult> LoadSnli(const std::string& path,
                                        SplitName split_name);
absl::StatusOr<SnliLoadResult> ReadSnli(std::istream& in,
                                        std::string_view source_name,
                                        SplitName split_name);

// The single SICK distribution file. Rows are routed to splits by the
// SemEval_set column (TRAIN, TRIAL, TEST).
absl::StatusOr<Corpus> LoadSick(const std::string& path);
absl::StatusOr<Corpus> ReadSick(std::istream& in, std::string_view source_name);

// Generic JSONL with keys id, premise, hypothesis, label.
absl::StatusOr<CorpusSplit> LoadGenericJsonl(const std::string& path,
                                             SplitName split_name);
absl::StatusOr<CorpusSplit> ReadGenericJsonl(std::istream& in,
                                             std::string_view source_name,
                                             SplitName split_name);

// Serializes a split in the generic JSONL format, one object per line with
// keys in the order id, premise, hypothesis, label.
std::string ToGenericJsonl(const CorpusSplit& split);
absl::Status WriteGenericJsonl(const CorpusSplit& split,
                               const std::string& path);

PerLabel<std::size_t> LabelHistogram(const CorpusSplit& split);

// Expected label counts indexed [split][label].
using ReferenceCounts = std::array<PerLabel<std::size_t>, 3>;

// Label histograms of the official distributions.
const ReferenceCounts& SnliReferenceCounts();
const ReferenceCounts& SickReferenceCounts();

struct ValidationCell {
  SplitName split;
  Label label;
  std::size_t expected = 0;
  std::size_t observed = 0;
  bool pass = false;
};

struct ValidationReport {
  std::vector<ValidationCell> cells;  // split-major, label-minor

  bool all_pass() const;
  std::size_t num_failed() const;
};

ValidationReport ValidateCounts(const Corpus& corpus,
                                const ReferenceCounts& expected);

}  // namespace hypobias

#endif  // HYPOBIAS_CORPUS_H_
