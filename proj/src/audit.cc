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

#include "hypobias/audit.h"

#include <utility>

#include "hypobias/string_util.h"
#include "hypobias/vocabulary.h"

namespace hypobias {

absl::StatusOr<AuditResult> RunAudit(const Corpus& corpus,
                                     const AuditOptions& options) {
  if (!(options.significance_level > 0.0 && options.significance_level < 1.0)) {
    return absl::InvalidArgumentError(
        StrCat("significance level must lie in (0, 1), got ",
               options.significance_level));
  }
  if (corpus.test.empty()) {
    return absl::InvalidArgumentError("the test split is empty");
  }
  Vocabulary vocab = BuildVocabulary(corpus.train, kHypothesisOnly);
  auto model = TrainNb(corpus.train, vocab, options.smoothing_alpha);
  if (!model.ok()) return model.status();
  auto baseline = TrainBaseline(corpus.train);
  if (!baseline.ok()) return baseline.status();

  const CorpusSplit& test = corpus.test;
  std::vector<Label> predictions = PredictHypotheses(*model, test);
  const Label majority = PredictBaseline(*baseline);
  std::vector<bool> nb_correct(test.size()), baseline_correct(test.size());
  for (std::size_t i = 0; i < test.size(); ++i) {
    nb_correct[i] = predictions[i] == test.pairs[i].label;
    baseline_correct[i] = majority == test.pairs[i].label;
  }
  auto sign = SignTest(nb_correct, baseline_correct);
  if (!sign.ok()) return sign.status();
  auto confusion = Confusion(predictions, GoldLabels(test));
  if (!confusion.ok()) return confusion.status();

  PartitionManifest manifest = PartitionByPredictions(test, predictions);

  AuditReport report;
  report.corpus_id = options.corpus_id;
  report.source_format = std::string(SourceFormatString(corpus.source_format));
  report.smoothing_alpha = options.smoothing_alpha;
  report.significance_level = options.significance_level;
  report.train_size = corpus.train.size();
  report.test_size = test.size();
  report.nb_vocab_size = vocab.size();
  report.baseline_label = majority;
  report.nb_accuracy = Accuracy(predictions, test);
  report.baseline_accuracy =
      Accuracy(std::vector<Label>(test.size(), majority), test);
  report.sign_test = *sign;
  report.confusion = *confusion;
  report.partition = SummarizePartition(manifest);
  report.stats = ComputeDescriptiveStats(corpus);
  report.verdict =
      DecideVerdict(report.sign_test.p_two_sided, report.nb_accuracy,
                    report.baseline_accuracy, options.significance_level);

  return AuditResult{
      .report = std::move(report),
      .manifest = std::move(manifest),
      .model = *std::move(model),
      .baseline = *baseline,
      .nb_predictions = std::move(predictions),
  };
}

}  // namespace hypobias
