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

#include "gtest/gtest.h"
#include "synthetic_corpus.h"

namespace hypobias {
namespace {

TEST(RunAuditTest, BiasedCorpusIsFlagged) {
  auto result = RunAudit(testing::MakeBiasedCorpus(), {.corpus_id = "biased"});
  ASSERT_TRUE(result.ok()) << result.status();
  const AuditReport& r = result->report;
  EXPECT_EQ(r.verdict, Verdict::kBiased);
  EXPECT_GT(r.nb_accuracy, r.baseline_accuracy + 0.2);
  EXPECT_LT(r.sign_test.log10_p, -5.0);
  EXPECT_EQ(r.corpus_id, "biased");
  EXPECT_EQ(r.source_format, "generic-jsonl");
}

TEST(RunAuditTest, UnbiasedCorpusIsNotFlagged) {
  auto result = RunAudit(testing::MakeUnbiasedCorpus(), {});
  ASSERT_TRUE(result.ok()) << result.status();
  const AuditReport& r = result->report;
  EXPECT_EQ(r.verdict, Verdict::kNotBiased);
  EXPECT_EQ(r.baseline_label, Label::kNeutral);
  EXPECT_GT(r.sign_test.p_two_sided, 0.01);
}

TEST(RunAuditTest, ReportIsInternallyConsistent) {
  const Corpus corpus = testing::MakeBiasedCorpus(5);
  auto result = RunAudit(corpus, {});
  ASSERT_TRUE(result.ok());
  const AuditReport& r = result->report;
  EXPECT_EQ(r.test_size, corpus.test.size());
  EXPECT_EQ(r.train_size, corpus.train.size());
  EXPECT_EQ(r.nb_accuracy, result->manifest.easy_ratio());
  EXPECT_EQ(r.nb_accuracy, r.partition.easy_ratio());
  EXPECT_DOUBLE_EQ(r.nb_accuracy, static_cast<double>(r.confusion.trace()) /
                                      static_cast<double>(r.test_size));
  const PerLabel<std::size_t> gold = LabelHistogram(corpus.test);
  for (Label label : kAllLabels) {
    EXPECT_EQ(r.confusion.column_sum(label), gold[LabelIndex(label)]);
  }
  EXPECT_EQ(r.sign_test.n_plus + r.sign_test.n_minus + r.sign_test.n_tie,
            corpus.test.size());
  EXPECT_EQ(r.nb_vocab_size, result->model.vocab().size());
}

TEST(RunAuditTest, Deterministic) {
  const Corpus corpus = testing::MakeBiasedCorpus(9);
  auto a = RunAudit(corpus, {});
  auto b = RunAudit(corpus, {});
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(a->report, b->report);
  EXPECT_EQ(a->manifest, b->manifest);
}

TEST(RunAuditTest, EmptySplitsAreErrors) {
  Corpus corpus = testing::MakeBiasedCorpus();
  corpus.test.pairs.clear();
  EXPECT_FALSE(RunAudit(corpus, {}).ok());
  corpus = testing::MakeBiasedCorpus();
  corpus.train.pairs.clear();
  EXPECT_FALSE(RunAudit(corpus, {}).ok());
}

TEST(RunAuditTest, RejectsBadOptions) {
  const Corpus corpus = testing::MakeBiasedCorpus();
  EXPECT_FALSE(RunAudit(corpus, {.smoothing_alpha = 0.0}).ok());
  EXPECT_FALSE(RunAudit(corpus, {.significance_level = 0.0}).ok());
  EXPECT_FALSE(RunAudit(corpus, {.significance_level = 1.5}).ok());
}

}  // namespace
}  // namespace hypobias
