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

#include "hypobias/partition.h"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "fmt/format.h"
#include "hypobias/string_util.h"
#include "hypobias/tokenizer.h"

namespace hypobias {
namespace {

constexpr std::string_view kEasyHeader = "#easy";
constexpr std::string_view kHardHeader = "#hard";

}  // namespace

double PartitionManifest::easy_ratio() const {
  return total() == 0 ? 0.0
                      : static_cast<double>(easy_ids.size()) /
                            static_cast<double>(total());
}

PartitionManifest PartitionByPredictions(
    const CorpusSplit& test, const std::vector<Label>& predictions) {
  PartitionManifest manifest;
  for (std::size_t i = 0; i < test.size(); ++i) {
    const SentencePair& pair = test.pairs[i];
    SubsetCounts& counts = manifest.per_label_breakdown[LabelIndex(pair.label)];
    if (predictions[i] == pair.label) {
      manifest.easy_ids.push_back(pair.id);
      ++counts.easy;
    } else {
      manifest.hard_ids.push_back(pair.id);
      ++counts.hard;
    }
  }
  return manifest;
}

PartitionManifest PartitionEasyHard(const NbModel& model,
                                    const CorpusSplit& test) {
  return PartitionByPredictions(test, PredictHypotheses(model, test));
}

absl::StatusOr<CorpusSplit> MaskPremises(const CorpusSplit& split,
                                         std::string_view unk_symbol) {
  const TokenSeq symbol_tokens = Tokenize(unk_symbol);
  if (symbol_tokens.size() != 1 || symbol_tokens.front() != unk_symbol) {
    return absl::InvalidArgumentError(
        StrCat("unknown-word symbol \"", unk_symbol,
               "\" must be a single lowercase token without edge punctuation"));
  }
  CorpusSplit masked{split.name, {}};
  masked.pairs.reserve(split.size());
  std::vector<std::string_view> words;
  for (const SentencePair& pair : split.pairs) {
    words.assign(CountTokens(pair.premise), unk_symbol);
    SentencePair out = pair;
    out.premise = fmt::format("{}", fmt::join(words, " "));
    masked.pairs.push_back(std::move(out));
  }
  return masked;
}

absl::StatusOr<std::string> FormatManifest(const PartitionManifest& manifest) {
  std::string out;
  auto append = [&out](const std::vector<std::string>& ids) -> absl::Status {
    for (const std::string& id : ids) {
      if (id.empty() || id.front() == '#' ||
          id.find_first_of("\r\n") != std::string::npos) {
        return absl::InvalidArgumentError(
            StrCat("pair id \"", id, "\" cannot be written to a manifest"));
      }
      StrAppend(&out, id, "\n");
    }
    return absl::OkStatus();
  };
  StrAppend(&out, kEasyHeader, "\n");
  if (absl::Status s = append(manifest.easy_ids); !s.ok()) return s;
  StrAppend(&out, kHardHeader, "\n");
  if (absl::Status s = append(manifest.hard_ids); !s.ok()) return s;
  return out;
}

absl::Status ExportManifest(const PartitionManifest& manifest,
                            const std::string& path) {
  auto text = FormatManifest(manifest);
  if (!text.ok()) return text.status();
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::UnavailableError(StrCat("cannot write ", path));
  out << *text;
  out.close();
  if (!out) return absl::DataLossError(StrCat("write failed: ", path));
  return absl::OkStatus();
}

absl::StatusOr<PartitionManifest> ParseManifest(std::string_view text) {
  PartitionManifest manifest;
  enum class Section { kNone, kEasy, kHard } section = Section::kNone;
  bool seen_easy = false, seen_hard = false;
  std::size_t line_number = 0;
  for (std::string_view line : Split(text, '\n')) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line == kEasyHeader) {
      if (seen_easy || seen_hard) {
        return absl::InvalidArgumentError(
            StrCat("manifest line ", line_number, ": unexpected #easy"));
      }
      seen_easy = true;
      section = Section::kEasy;
    } else if (line == kHardHeader) {
      if (!seen_easy || seen_hard) {
        return absl::InvalidArgumentError(
            StrCat("manifest line ", line_number, ": unexpected #hard"));
      }
      seen_hard = true;
      section = Section::kHard;
    } else if (section == Section::kEasy) {
      manifest.easy_ids.emplace_back(line);
    } else if (section == Section::kHard) {
      manifest.hard_ids.emplace_back(line);
    } else {
      return absl::InvalidArgumentError(StrCat("manifest line ", line_number,
                                               ": id before the #easy header"));
    }
  }
  if (!seen_easy || !seen_hard) {
    return absl::InvalidArgumentError(
        "manifest must contain #easy and #hard sections");
  }
  return manifest;
}

absl::StatusOr<PartitionManifest> ReadManifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(StrCat("cannot open ", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseManifest(buffer.str());
}

absl::Status FillBreakdown(const CorpusSplit& test,
                           PartitionManifest* manifest) {
  std::unordered_map<std::string_view, Label> gold;
  for (const SentencePair& pair : test.pairs) gold.emplace(pair.id, pair.label);
  if (manifest->total() != gold.size()) {
    return absl::InvalidArgumentError(
        StrCat("manifest lists ", manifest->total(), " ids but the split has ",
               gold.size(), " pairs"));
  }
  PerLabel<SubsetCounts> breakdown{};
  std::unordered_map<std::string_view, bool> seen;
  auto tally = [&](const std::vector<std::string>& ids,
                   bool easy) -> absl::Status {
    for (const std::string& id : ids) {
      auto it = gold.find(id);
      if (it == gold.end()) {
        return absl::InvalidArgumentError(
            StrCat("manifest id ", id, " is not in the split"));
      }
      if (!seen.emplace(id, easy).second) {
        return absl::InvalidArgumentError(
            StrCat("manifest id ", id, " listed twice"));
      }
      SubsetCounts& counts = breakdown[LabelIndex(it->second)];
      ++(easy ? counts.easy : counts.hard);
    }
    return absl::OkStatus();
  };
  if (absl::Status s = tally(manifest->easy_ids, true); !s.ok()) return s;
  if (absl::Status s = tally(manifest->hard_ids, false); !s.ok()) return s;
  manifest->per_label_breakdown = breakdown;
  return absl::OkStatus();
}

}  // namespace hypobias
