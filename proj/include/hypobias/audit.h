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

#ifndef HYPOBIAS_AUDIT_H_
#define HYPOBIAS_AUDIT_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "hypobias/corpus.h"
#include "hypobias/naive_bayes.h"
#include "hypobias/partition.h"
#include "hypobias/report.h"

namespace hypobias {

struct AuditOptions {
  std::string corpus_id = "corpus";
  double smoothing_alpha = kDefaultSmoothing;
  double significance_level = kDefaultSignificanceLevel;
};

struct AuditResult {
  AuditReport report;
  PartitionManifest manifest;
  NbModel model;
  BaselineModel baseline;
  std::vector<Label> nb_predictions;
};

// Fits the hypothesis-only classifier and the majority baseline on the
// train split, scores both on the test split, and compares them with the
// paired sign test. The classifier's vocabulary is the train hypotheses.
absl::StatusOr<AuditResult> RunAudit(const Corpus& corpus,
                                     const AuditOptions& options);

}  // namespace hypobias

#endif  // HYPOBIAS_AUDIT_H_
