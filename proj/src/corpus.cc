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

#include "hypobias/corpus.h"

#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "hypobias/string_util.h"
#include "hypobias/utf8.h"
#include "json.hpp"

namespace hypobias {
namespace {

using json = nlohmann::json;

constexpr std::string_view kNoConsensus = "-";

absl::Status LineError(std::string_view source, std::size_t line,
                       std::string_view message) {
  return absl::InvalidArgumentError(StrCat(source, ":", line, ": ", message));
}

// Strips a trailing carriage return left by CRLF files.
std::string_view ChompCr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

bool IsBlank(std::string_view line) {
  return StripAsciiWhitespace(line).empty();
}

// Checks the SentencePair invariants and id uniqueness within a split.
class PairChecker {
 public:
  explicit PairChecker(std::string_view source) : source_(source) {}

  absl::Status Check(const SentencePair& pair, std::size_t line) {
    if (pair.id.empty()) return LineError(source_, line, "empty pair id");
    if (StripAsciiWhitespace(pair.premise).empty()) {
      return LineError(source_, line,
                       StrCat("empty premise in pair ", pair.id));
    }
    if (StripAsciiWhitespace(pair.hypothesis).empty()) {
      return LineError(source_, line,
                       StrCat("empty hypothesis in pair ", pair.id));
    }
    if (!seen_.insert(pair.id).second) {
      return LineError(source_, line, StrCat("duplicate pair id ", pair.id));
    }
    return absl::OkStatus();
  }

 private:
  std::string_view source_;
  std::unordered_set<std::string> seen_;
};

absl::StatusOr<json> ParseJsonLine(std::string_view line,
                                   std::string_view source, std::size_t n) {
  if (!utf8::IsValid(line)) return LineError(source, n, "invalid UTF-8");
  json object = json::parse(line, /*cb=*/nullptr, /*allow_exceptions=*/false);
  if (object.is_discarded()) return LineError(source, n, "malformed JSON");
  if (!object.is_object()) {
    return LineError(source, n, "expected a JSON object");
  }
  return object;
}

absl::StatusOr<std::string> StringField(const json& object,
                                        std::string_view key,
                                        std::string_view source,
                                        std::size_t n) {
  auto it = object.find(key);
  if (it == object.end()) {
    return LineError(source, n, StrCat("missing key \"", key, "\""));
  }
  if (!it->is_string()) {
    return LineError(source, n, StrCat("key \"", key, "\" is not a string"));
  }
  return it->get<std::string>();
}

absl::StatusOr<std::ifstream> OpenForRead(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(StrCat("cannot open ", path));
  return in;
}

}  // namespace

std::string_view SplitNameString(SplitName split) {
  switch (split) {
    case SplitName::kTrain:
      return "train";
    case SplitName::kDev:
      return "dev";
    case SplitName::kTest:
      return "test";
  }
  return "unknown";
}

std::string_view SourceFormatString(SourceFormat format) {
  switch (format) {
    case SourceFormat::kSnliJsonl:
      return "snli-jsonl";
    case SourceFormat::kSickTsv:
      return "sick-tsv";
    case SourceFormat::kGenericJsonl:
      return "generic-jsonl";
  }
  return "unknown";
}

const CorpusSplit& Corpus::split(SplitName name) const {
  switch (name) {
    case SplitName::kTrain:
      return train;
    case SplitName::kDev:
      return dev;
    case SplitName::kTest:
      break;
  }
  return test;
}

CorpusSplit& Corpus::split(SplitName name) {
  return const_cast<CorpusSplit&>(std::as_const(*this).split(name));
}

absl::StatusOr<SnliLoadResult> ReadSnli(std::istream& in,
                                        std::string_view source_name,
                                        SplitName split_name) {
  SnliLoadResult result;
  result.split.name = split_name;
  PairChecker checker(source_name);
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (IsBlank(line)) continue;
    ++result.raw_lines;
    auto object = ParseJsonLine(ChompCr(line), source_name, line_number);
    if (!object.ok()) return object.status();
    auto gold = StringField(*object, "gold_label", source_name, line_number);
    if (!gold.ok()) return gold.status();
    if (*gold == kNoConsensus) {
      ++result.excluded;
      continue;
    }
    std::optional<Label> label = ParseLabel(*gold);
    if (!label.has_value()) {
      return LineError(source_name, line_number,
                       StrCat("unknown gold_label \"", *gold, "\""));
    }
    SentencePair pair;
    pair.label = *label;
    auto premise = StringField(*object, "sentence1", source_name, line_number);
    if (!premise.ok()) return premise.status();
    auto hypothesis =
        StringField(*object, "sentence2", source_name, line_number);
    if (!hypothesis.ok()) return hypothesis.status();
    auto id = StringField(*object, "pairID", source_name, line_number);
    if (!id.ok()) return id.status();
    pair.premise = *std::move(premise);
    pair.hypothesis = *std::move(hypothesis);
    pair.id = *std::move(id);
    if (absl::Status s = checker.Check(pair, line_number); !s.ok()) return s;
    result.split.pairs.push_back(std::move(pair));
  }
  if (in.bad()) {
    return absl::DataLossError(StrCat("read error in ", source_name));
  }
  return result;
}

absl::StatusOr<SnliLoadResult> LoadSnli(const std::string& path,
                                        SplitName split_name) {
  auto in = OpenForRead(path);
  if (!in.ok()) return in.status();
  return ReadSnli(*in, path, split_name);
}

absl::StatusOr<Corpus> ReadSick(std::istream& in,
                                std::string_view source_name) {
  static constexpr std::array<std::string_view, 5> kRequired = {
      "pair_ID", "sentence_A", "sentence_B", "entailment_label", "SemEval_set"};

  Corpus corpus;
  corpus.source_format = SourceFormat::kSickTsv;

  std::string line;
  std::size_t line_number = 0;
  bool have_header = false;
  while (!have_header && std::getline(in, line)) {
    ++line_number;
    have_header = !IsBlank(line);
  }
  if (!have_header) {
    return absl::InvalidArgumentError(
        StrCat(source_name, ": missing header row"));
  }
  if (!utf8::IsValid(line)) {
    return LineError(source_name, line_number, "invalid UTF-8");
  }
  std::vector<std::string_view> header = Split(ChompCr(line), '\t');
  std::array<std::size_t, kRequired.size()> column{};
  for (std::size_t c = 0; c < kRequired.size(); ++c) {
    bool found = false;
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (StripAsciiWhitespace(header[i]) == kRequired[c]) {
        column[c] = i;
        found = true;
        break;
      }
    }
    if (!found) {
      return absl::InvalidArgumentError(StrCat(
          source_name, ": missing required column \"", kRequired[c], "\""));
    }
  }
  std::size_t min_columns = 0;
  for (std::size_t c : column) min_columns = std::max(min_columns, c + 1);

  std::array<PairChecker, 3> checkers = {PairChecker(source_name),
                                         PairChecker(source_name),
                                         PairChecker(source_name)};
  while (std::getline(in, line)) {
    ++line_number;
    if (IsBlank(line)) continue;
    std::string_view row = ChompCr(line);
    if (!utf8::IsValid(row)) {
      return LineError(source_name, line_number, "invalid UTF-8");
    }
    std::vector<std::string_view> fields = Split(row, '\t');
    if (fields.size() < min_columns) {
      return LineError(source_name, line_number,
                       StrCat("expected at least ", min_columns,
                              " columns, found ", fields.size()));
    }
    std::string_view set = StripAsciiWhitespace(fields[column[4]]);
    SplitName split;
    if (EqualsIgnoreCase(set, "TRAIN")) {
      split = SplitName::kTrain;
    } else if (EqualsIgnoreCase(set, "TRIAL")) {
      split = SplitName::kDev;
    } else if (EqualsIgnoreCase(set, "TEST")) {
      split = SplitName::kTest;
    } else {
      return LineError(source_name, line_number,
                       StrCat("unknown SemEval_set \"", set, "\""));
    }
    std::string_view label_text = StripAsciiWhitespace(fields[column[3]]);
    std::optional<Label> label = ParseLabel(label_text);
    if (!label.has_value()) {
      return LineError(source_name, line_number,
                       StrCat("unknown entailment_label \"", label_text, "\""));
    }
    SentencePair pair{
        .id = std::string(StripAsciiWhitespace(fields[column[0]])),
        .premise = std::string(fields[column[1]]),
        .hypothesis = std::string(fields[column[2]]),
        .label = *label,
    };
    auto& checker = checkers[static_cast<std::size_t>(split)];
    if (absl::Status s = checker.Check(pair, line_number); !s.ok()) return s;
    corpus.split(split).pairs.push_back(std::move(pair));
  }
  if (in.bad()) {
    return absl::DataLossError(StrCat("read error in ", source_name));
  }
  return corpus;
}

absl::StatusOr<Corpus> LoadSick(const std::string& path) {
  auto in = OpenForRead(path);
  if (!in.ok()) return in.status();
  return ReadSick(*in, path);
}

absl::StatusOr<CorpusSplit> ReadGenericJsonl(std::istream& in,
                                             std::string_view source_name,
                                             SplitName split_name) {
  CorpusSplit split{split_name, {}};
  PairChecker checker(source_name);
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (IsBlank(line)) continue;
    auto object = ParseJsonLine(ChompCr(line), source_name, line_number);
    if (!object.ok()) return object.status();
    SentencePair pair;
    auto id = StringField(*object, "id", source_name, line_number);
    if (!id.ok()) return id.status();
    auto premise = StringField(*object, "premise", source_name, line_number);
    if (!premise.ok()) return premise.status();
    auto hypothesis =
        StringField(*object, "hypothesis", source_name, line_number);
    if (!hypothesis.ok()) return hypothesis.status();
    auto label_text = StringField(*object, "label", source_name, line_number);
    if (!label_text.ok()) return label_text.status();
    std::optional<Label> label = ParseLabel(*label_text);
    if (!label.has_value()) {
      return LineError(source_name, line_number,
                       StrCat("unknown label \"", *label_text, "\""));
    }
    pair.id = *std::move(id);
    pair.premise = *std::move(premise);
    pair.hypothesis = *std::move(hypothesis);
    pair.label = *label;
    if (absl::Status s = checker.Check(pair, line_number); !s.ok()) return s;
    split.pairs.push_back(std::move(pair));
  }
  if (in.bad()) {
    return absl::DataLossError(StrCat("read error in ", source_name));
  }
  return split;
}

absl::StatusOr<CorpusSplit> LoadGenericJsonl(const std::string& path,
                                             SplitName split_name) {
  auto in = OpenForRead(path);
  if (!in.ok()) return in.status();
  return ReadGenericJsonl(*in, path, split_name);
}

std::string ToGenericJsonl(const CorpusSplit& split) {
  std::string out;
  for (const SentencePair& pair : split.pairs) {
    // ordered_json keeps the documented key order.
    nlohmann::ordered_json object;
    object["id"] = pair.id;
    object["premise"] = pair.premise;
    object["hypothesis"] = pair.hypothesis;
    object["label"] = LabelName(pair.label);
    StrAppend(&out, object.dump(), "\n");
  }
  return out;
}

absl::Status WriteGenericJsonl(const CorpusSplit& split,
                               const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::UnavailableError(StrCat("cannot write ", path));
  out << ToGenericJsonl(split);
  out.close();
  if (!out) return absl::DataLossError(StrCat("write failed: ", path));
  return absl::OkStatus();
}

PerLabel<std::size_t> LabelHistogram(const CorpusSplit& split) {
  PerLabel<std::size_t> counts{};
  for (const SentencePair& pair : split.pairs) ++counts[LabelIndex(pair.label)];
  return counts;
}

const ReferenceCounts& SnliReferenceCounts() {
  static const ReferenceCounts kCounts = {{
      {183416, 182764, 183187},
      {3329, 3235, 3278},
      {3368, 3219, 3237},
  }};
  return kCounts;
}

const ReferenceCounts& SickReferenceCounts() {
  static const ReferenceCounts kCounts = {{
      {1299, 2536, 665},
      {144, 282, 74},
      {1414, 2793, 720},
  }};
  return kCounts;
}

bool ValidationReport::all_pass() const { return num_failed() == 0; }

std::size_t ValidationReport::num_failed() const {
  std::size_t failed = 0;
  for (const ValidationCell& cell : cells) failed += cell.pass ? 0 : 1;
  return failed;
}

ValidationReport ValidateCounts(const Corpus& corpus,
                                const ReferenceCounts& expected) {
  ValidationReport report;
  for (SplitName split : kAllSplits) {
    const PerLabel<std::size_t> observed = LabelHistogram(corpus.split(split));
    for (Label label : kAllLabels) {
      const std::size_t s = static_cast<std::size_t>(split);
      const std::size_t l = LabelIndex(label);
      report.cells.push_back(ValidationCell{
          .split = split,
          .label = label,
          .expected = expected[s][l],
          .observed = observed[l],
          .pass = expected[s][l] == observed[l],
      });
    }
  }
  return report;
}

}  // namespace hypobias
