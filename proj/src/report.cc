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

#include "hypobias/report.h"

#include <cmath>
#include <iterator>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>

#include "fmt/format.h"
#include "hypobias/string_util.h"
#include "hypobias/tokenizer.h"
#include "hypobias/vocabulary.h"
#include "json.hpp"

namespace hypobias {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr int kReportSchemaVersion = 1;

struct TokenTally {
  std::size_t tokens = 0;
  std::size_t oov_tokens = 0;
  std::unordered_set<std::string> types;
  std::unordered_set<std::string> oov_types;
};

TokenTally TallyAgainst(const CorpusSplit& split, const Vocabulary& known) {
  TokenTally tally;
  auto visit = [&](const std::string& text) {
    for (std::string& token : Tokenize(text)) {
      ++tally.tokens;
      const bool oov = !known.Contains(token);
      if (oov) {
        ++tally.oov_tokens;
        tally.oov_types.insert(token);
      }
      tally.types.insert(std::move(token));
    }
  };
  for (const SentencePair& pair : split.pairs) {
    visit(pair.premise);
    visit(pair.hypothesis);
  }
  return tally;
}

double Ratio(std::size_t numerator, std::size_t denominator) {
  return denominator == 0 ? 0.0
                          : static_cast<double>(numerator) /
                                static_cast<double>(denominator);
}

std::string Percent(double fraction) {
  return fmt::format("{:.1f}%", 100.0 * fraction);
}

std::string FormatPValue(const SignTestResult& t) {
  if (t.p_two_sided >= 1e-4) return fmt::format("{:.3g}", t.p_two_sided);
  double exponent = std::floor(t.log10_p);
  double mantissa = std::pow(10.0, t.log10_p - exponent);
  // Keep "9.96e-5" from printing as "10.0e-5".
  if (mantissa >= 9.95) {
    mantissa /= 10.0;
    exponent += 1.0;
  }
  return fmt::format("{:.1f}e{}", mantissa, static_cast<int>(exponent));
}

ordered_json SubsetCountsJson(const PerLabel<SubsetCounts>& per_label) {
  ordered_json out = ordered_json::object();
  for (Label label : kAllLabels) {
    const SubsetCounts& c = per_label[LabelIndex(label)];
    out[std::string(LabelName(label))] = {{"easy", c.easy}, {"hard", c.hard}};
  }
  return out;
}

Label LabelFromJson(const json& value) {
  auto label = ParseLabel(value.get<std::string>());
  if (!label.has_value()) {
    throw std::invalid_argument("unknown label " + value.dump());
  }
  return *label;
}

}  // namespace

std::size_t ConfusionMatrix::row_sum(Label predicted) const {
  std::size_t sum = 0;
  for (std::size_t c : counts[LabelIndex(predicted)]) sum += c;
  return sum;
}

std::size_t ConfusionMatrix::column_sum(Label gold) const {
  std::size_t sum = 0;
  for (const auto& row : counts) sum += row[LabelIndex(gold)];
  return sum;
}

std::size_t ConfusionMatrix::trace() const {
  std::size_t sum = 0;
  for (std::size_t i = 0; i < kNumLabels; ++i) sum += counts[i][i];
  return sum;
}

std::size_t ConfusionMatrix::total() const {
  std::size_t sum = 0;
  for (Label label : kAllLabels) sum += row_sum(label);
  return sum;
}

absl::StatusOr<ConfusionMatrix> Confusion(const std::vector<Label>& predictions,
                                          const std::vector<Label>& gold) {
  if (predictions.size() != gold.size()) {
    return absl::InvalidArgumentError(
        StrCat("confusion matrix needs paired sequences, got lengths ",
               predictions.size(), " and ", gold.size()));
  }
  ConfusionMatrix matrix;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    ++matrix.counts[LabelIndex(predictions[i])][LabelIndex(gold[i])];
  }
  return matrix;
}

std::vector<Label> GoldLabels(const CorpusSplit& split) {
  std::vector<Label> labels;
  labels.reserve(split.size());
  for (const SentencePair& pair : split.pairs) labels.push_back(pair.label);
  return labels;
}

DescriptiveStats ComputeDescriptiveStats(const Corpus& corpus) {
  DescriptiveStats stats;
  std::size_t pairs = 0, premise_tokens = 0, hypothesis_tokens = 0;
  for (SplitName name : kAllSplits) {
    for (const SentencePair& pair : corpus.split(name).pairs) {
      ++pairs;
      premise_tokens += CountTokens(pair.premise);
      hypothesis_tokens += CountTokens(pair.hypothesis);
    }
  }
  stats.premise_mean_tokens = Ratio(premise_tokens, pairs);
  stats.hypothesis_mean_tokens = Ratio(hypothesis_tokens, pairs);

  const Vocabulary train_vocab = BuildVocabulary(corpus.train, kBothFields);
  const TokenTally tally = TallyAgainst(corpus.test, train_vocab);
  stats.vocab_size_train = train_vocab.size();
  stats.vocab_size_test = tally.types.size();
  stats.oov_ratio_test = Ratio(tally.oov_tokens, tally.tokens);
  stats.oov_type_ratio_test = Ratio(tally.oov_types.size(), tally.types.size());
  return stats;
}

double CrossCorpusOov(const CorpusSplit& test_split,
                      const CorpusSplit& reference_train) {
  const TokenTally tally =
      TallyAgainst(test_split, BuildVocabulary(reference_train, kBothFields));
  return Ratio(tally.oov_tokens, tally.tokens);
}

double CrossCorpusOovTypes(const CorpusSplit& test_split,
                           const CorpusSplit& reference_train) {
  const TokenTally tally =
      TallyAgainst(test_split, BuildVocabulary(reference_train, kBothFields));
  return Ratio(tally.oov_types.size(), tally.types.size());
}

std::string_view VerdictString(Verdict verdict) {
  return verdict == Verdict::kBiased ? "biased" : "not-biased";
}

Verdict DecideVerdict(double p_two_sided, double nb_accuracy,
                      double baseline_accuracy, double significance_level) {
  return p_two_sided < significance_level && nb_accuracy > baseline_accuracy
             ? Verdict::kBiased
             : Verdict::kNotBiased;
}

double PartitionSummary::easy_ratio() const { return Ratio(easy, easy + hard); }

PartitionSummary SummarizePartition(const PartitionManifest& manifest) {
  return PartitionSummary{.easy = manifest.easy_ids.size(),
                          .hard = manifest.hard_ids.size(),
                          .per_label = manifest.per_label_breakdown};
}

namespace {

std::string RenderJson(const AuditReport& r) {
  ordered_json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["corpus_id"] = r.corpus_id;
  doc["source_format"] = r.source_format;
  doc["smoothing_alpha"] = r.smoothing_alpha;
  doc["significance_level"] = r.significance_level;
  doc["train_size"] = r.train_size;
  doc["test_size"] = r.test_size;
  doc["nb_vocab_size"] = r.nb_vocab_size;
  doc["baseline_label"] = LabelName(r.baseline_label);
  doc["nb_accuracy"] = r.nb_accuracy;
  doc["baseline_accuracy"] = r.baseline_accuracy;
  doc["sign_test"] = {
      {"n_plus", r.sign_test.n_plus},
      {"n_minus", r.sign_test.n_minus},
      {"n_tie", r.sign_test.n_tie},
      {"p_two_sided", r.sign_test.p_two_sided},
      {"log10_p", r.sign_test.log10_p},
  };
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.confusion.counts) rows.push_back(row);
  doc["confusion"] = {
      {"orientation", "rows=predicted,columns=gold"},
      {"labels", {"entailment", "neutral", "contradiction"}},
      {"counts", std::move(rows)},
  };
  doc["partition"] = {
      {"easy", r.partition.easy},
      {"hard", r.partition.hard},
      {"easy_ratio", r.partition.easy_ratio()},
      {"per_label", SubsetCountsJson(r.partition.per_label)},
  };
  doc["stats"] = {
      {"premise_mean_tokens", r.stats.premise_mean_tokens},
      {"hypothesis_mean_tokens", r.stats.hypothesis_mean_tokens},
      {"vocab_size_train", r.stats.vocab_size_train},
      {"vocab_size_test", r.stats.vocab_size_test},
      {"oov_ratio_test", r.stats.oov_ratio_test},
      {"oov_type_ratio_test", r.stats.oov_type_ratio_test},
  };
  doc["verdict"] = VerdictString(r.verdict);
  return doc.dump(2) + "\n";
}

std::string RenderText(const AuditReport& r) {
  std::string out;
  auto it = std::back_inserter(out);
  fmt::format_to(it, "Hypothesis-only bias audit: {} ({})\n", r.corpus_id,
                 r.source_format);
  fmt::format_to(it,
                 "  train pairs: {}  test pairs: {}  NB vocabulary: {}  "
                 "alpha: {}\n\n",
                 WithThousands(r.train_size), WithThousands(r.test_size),
                 WithThousands(r.nb_vocab_size), r.smoothing_alpha);

  fmt::format_to(it, "Label prediction accuracy\n");
  fmt::format_to(it, "  {:<12} {:<27} {}\n", "Corpus",
                 "TE label prediction model", "Baseline model");
  fmt::format_to(it, "  {:<12} {:<27} {} (majority: {})\n", r.corpus_id,
                 Percent(r.nb_accuracy), Percent(r.baseline_accuracy),
                 LabelDisplayName(r.baseline_label));

  fmt::format_to(it, "\nSign test (NB model vs baseline)\n");
  fmt::format_to(it, "  n+ = {}  n- = {}  ties = {}\n", r.sign_test.n_plus,
                 r.sign_test.n_minus, r.sign_test.n_tie);
  fmt::format_to(it, "  p = {}  (log10 p = {:.2f})\n",
                 FormatPValue(r.sign_test), r.sign_test.log10_p);
  fmt::format_to(it, "  verdict: {} (significance level {})\n",
                 VerdictString(r.verdict), r.significance_level);

  fmt::format_to(it, "\nConfusion matrix (rows: predicted, columns: gold)\n");
  fmt::format_to(it, "  {:<14} {:>12} {:>12} {:>14}\n", "Predicted",
                 "Entailment", "Neutral", "Contradiction");
  for (Label predicted : kAllLabels) {
    fmt::format_to(
        it, "  {:<14} {:>12} {:>12} {:>14}\n", LabelDisplayName(predicted),
        WithThousands(r.confusion.at(predicted, Label::kEntailment)),
        WithThousands(r.confusion.at(predicted, Label::kNeutral)),
        WithThousands(r.confusion.at(predicted, Label::kContradiction)));
  }

  auto cell = [](std::size_t count, std::size_t whole) {
    return fmt::format("{} ({})", WithThousands(count),
                       Percent(Ratio(count, whole)));
  };
  fmt::format_to(it, "\nEmpirical easy/hard partition\n");
  fmt::format_to(it, "  {:<14} {:>18} {:>18}\n", "", "E_e", "H_e");
  for (Label label : kAllLabels) {
    const SubsetCounts& c = r.partition.per_label[LabelIndex(label)];
    fmt::format_to(it, "  {:<14} {:>18} {:>18}\n", LabelDisplayName(label),
                   cell(c.easy, r.partition.easy),
                   cell(c.hard, r.partition.hard));
  }
  const std::size_t total = r.partition.easy + r.partition.hard;
  fmt::format_to(it, "  {:<14} {:>18} {:>18}\n", "Total",
                 cell(r.partition.easy, total), cell(r.partition.hard, total));

  constexpr std::string_view kRow = "  {:<34} {}\n";
  fmt::format_to(it, "\nDescriptive statistics\n");
  fmt::format_to(it, kRow, "Premise mean token count",
                 fmt::format("{:.1f}", r.stats.premise_mean_tokens));
  fmt::format_to(it, kRow, "Hypothesis mean token count",
                 fmt::format("{:.1f}", r.stats.hypothesis_mean_tokens));
  fmt::format_to(it, kRow, "Vocabulary size of training pairs",
                 WithThousands(r.stats.vocab_size_train));
  fmt::format_to(it, kRow, "Vocabulary size of test pairs",
                 WithThousands(r.stats.vocab_size_test));
  fmt::format_to(
      it, kRow, "OOV ratio of test pairs",
      fmt::format("{:.2f}% (types: {:.2f}%)", 100.0 * r.stats.oov_ratio_test,
                  100.0 * r.stats.oov_type_ratio_test));
  return out;
}

}  // namespace

std::string RenderReport(const AuditReport& report, ReportFormat format) {
  return format == ReportFormat::kJson ? RenderJson(report)
                                       : RenderText(report);
}

absl::StatusOr<AuditReport> ParseReportJson(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    return absl::InvalidArgumentError("report is not a JSON object");
  }
  try {
    if (doc.at("schema_version").get<int>() != kReportSchemaVersion) {
      return absl::InvalidArgumentError(
          StrCat("unsupported report schema_version ",
                 doc.at("schema_version").dump()));
    }
    AuditReport r;
    r.corpus_id = doc.at("corpus_id").get<std::string>();
    r.source_format = doc.at("source_format").get<std::string>();
    r.smoothing_alpha = doc.at("smoothing_alpha").get<double>();
    r.significance_level = doc.at("significance_level").get<double>();
    r.train_size = doc.at("train_size").get<std::size_t>();
    r.test_size = doc.at("test_size").get<std::size_t>();
    r.nb_vocab_size = doc.at("nb_vocab_size").get<std::size_t>();
    r.baseline_label = LabelFromJson(doc.at("baseline_label"));
    r.nb_accuracy = doc.at("nb_accuracy").get<double>();
    r.baseline_accuracy = doc.at("baseline_accuracy").get<double>();

    const json& t = doc.at("sign_test");
    r.sign_test.n_plus = t.at("n_plus").get<std::uint64_t>();
    r.sign_test.n_minus = t.at("n_minus").get<std::uint64_t>();
    r.sign_test.n_tie = t.at("n_tie").get<std::uint64_t>();
    r.sign_test.p_two_sided = t.at("p_two_sided").get<double>();
    r.sign_test.log10_p = t.at("log10_p").get<double>();

    const json& rows = doc.at("confusion").at("counts");
    if (rows.size() != kNumLabels) {
      return absl::InvalidArgumentError("confusion matrix must be 3x3");
    }
    for (std::size_t i = 0; i < kNumLabels; ++i) {
      auto row = rows[i].get<std::vector<std::size_t>>();
      if (row.size() != kNumLabels) {
        return absl::InvalidArgumentError("confusion matrix must be 3x3");
      }
      std::copy(row.begin(), row.end(), r.confusion.counts[i].begin());
    }

    const json& p = doc.at("partition");
    r.partition.easy = p.at("easy").get<std::size_t>();
    r.partition.hard = p.at("hard").get<std::size_t>();
    for (Label label : kAllLabels) {
      const json& c = p.at("per_label").at(std::string(LabelName(label)));
      r.partition.per_label[LabelIndex(label)] = SubsetCounts{
          c.at("easy").get<std::size_t>(), c.at("hard").get<std::size_t>()};
    }

    const json& s = doc.at("stats");
    r.stats.premise_mean_tokens = s.at("premise_mean_tokens").get<double>();
    r.stats.hypothesis_mean_tokens =
        s.at("hypothesis_mean_tokens").get<double>();
    r.stats.vocab_size_train = s.at("vocab_size_train").get<std::size_t>();
    r.stats.vocab_size_test = s.at("vocab_size_test").get<std::size_t>();
    r.stats.oov_ratio_test = s.at("oov_ratio_test").get<double>();
    r.stats.oov_type_ratio_test = s.at("oov_type_ratio_test").get<double>();

    const std::string verdict = doc.at("verdict").get<std::string>();
    if (verdict == VerdictString(Verdict::kBiased)) {
      r.verdict = Verdict::kBiased;
    } else if (verdict == VerdictString(Verdict::kNotBiased)) {
      r.verdict = Verdict::kNotBiased;
    } else {
      return absl::InvalidArgumentError(
          StrCat("unknown verdict \"", verdict, "\""));
    }
    return r;
  } catch (const std::exception& e) {
    return absl::InvalidArgumentError(
        StrCat("malformed report document: ", e.what()));
  }
}

}  // namespace hypobias
