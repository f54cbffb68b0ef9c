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

#ifndef HYPOBIAS_REPORT_H_
#define HYPOBIAS_REPORT_H_

#include <cstddef>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "hypobias/corpus.h"
#include "hypobias/label.h"
#include "hypobias/partition.h"
#include "hypobias/sign_test.h"

namespace hypobias {

// Rows are predicted labels, columns are gold labels.
struct ConfusionMatrix {
  PerLabel<PerLabel<std::size_t>> counts{};

  std::size_t at(Label predicted, Label gold) const {
    return counts[LabelIndex(predicted)][LabelIndex(gold)];
  }
  std::size_t row_sum(Label predicted) const;
  std::size_t column_sum(Label gold) const;
  std::size_t trace() const;
  std::size_t total() const;

  friend bool operator==(const ConfusionMatrix&,
                         const ConfusionMatrix&) = default;
};

absl::StatusOr<ConfusionMatrix> Confusion(const std::vector<Label>& predictions,
                                          const std::vector<Label>& gold);

std::vector<Label> GoldLabels(const CorpusSplit& split);

struct DescriptiveStats {
  // Pooled over every pair of every split.
  double premise_mean_tokens = 0.0;
  double hypothesis_mean_tokens = 0.0;
  // Distinct tokens over premises and hypotheses.
  std::size_t vocab_size_train = 0;
  std::size_t vocab_size_test = 0;
  // Test tokens whose type is missing from the train vocabulary, as a share
  // of test token occurrences.
  double oov_ratio_test = 0.0;
  // Same, counted over distinct test types.
  double oov_type_ratio_test = 0.0;

  friend bool operator==(const DescriptiveStats&,
                         const DescriptiveStats&) = default;
};

DescriptiveStats ComputeDescriptiveStats(const Corpus& corpus);

// Token-level OOV ratio of `test_split` (both fields) against the vocabulary
// of `reference_train` (both fields). Zero when the test split has no tokens.
double CrossCorpusOov(const CorpusSplit& test_split,
                      const CorpusSplit& reference_train);

// Type-level counterpart of CrossCorpusOov.
double CrossCorpusOovTypes(const CorpusSplit& test_split,
                           const CorpusSplit& reference_train);

enum class Verdict { kBiased, kNotBiased };

std::string_view VerdictString(Verdict verdict);

inline constexpr double kDefaultSignificanceLevel = 0.01;

// Biased iff the hypothesis-only classifier beats the majority baseline and
// the difference is significant at `significance_level`.
Verdict DecideVerdict(double p_two_sided, double nb_accuracy,
                      double baseline_accuracy,
                      double significance_level = kDefaultSignificanceLevel);

struct PartitionSummary {
  std::size_t easy = 0;
  std::size_t hard = 0;
  PerLabel<SubsetCounts> per_label{};

  double easy_ratio() const;

  friend bool operator==(const PartitionSummary&,
                         const PartitionSummary&) = default;
};

PartitionSummary SummarizePartition(const PartitionManifest& manifest);

struct AuditReport {
  std::string corpus_id;
  std::string source_format;
  double smoothing_alpha = 1.0;
  double significance_level = kDefaultSignificanceLevel;
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  std::size_t nb_vocab_size = 0;
  Label baseline_label = Label::kEntailment;
  double nb_accuracy = 0.0;
  double baseline_accuracy = 0.0;
  SignTestResult sign_test;
  ConfusionMatrix confusion;
  PartitionSummary partition;
  DescriptiveStats stats;
  Verdict verdict = Verdict::kNotBiased;

  friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

enum class ReportFormat { kJson, kText };

// Deterministic rendering. JSON output carries a schema_version field and
// parses back with ParseReportJson().
std::string RenderReport(const AuditReport& report, ReportFormat format);
absl::StatusOr<AuditReport> ParseReportJson(const std::string& text);

}  // namespace hypobias

#endif  // HYPOBIAS_REPORT_H_
