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

#ifndef HYPOBIAS_VOCABULARY_H_
#define HYPOBIAS_VOCABULARY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypobias/corpus.h"
#include "hypobias/string_util.h"
#include "hypobias/tokenizer.h"

namespace hypobias {

// Bijection between tokens and the indices 0..size()-1. Indices are handed
// out in first-occurrence order.
class Vocabulary {
 public:
  Vocabulary() = default;

  // Builds a vocabulary from a token list with no duplicates, preserving
  // order. Returns nullopt if `tokens` repeats a token.
  static std::optional<Vocabulary> FromTokens(std::vector<std::string> tokens);

  // Returns the index of `token`, inserting it if new.
  std::size_t Add(std::string_view token);

  std::optional<std::size_t> Find(std::string_view token) const;
  bool Contains(std::string_view token) const {
    return Find(token).has_value();
  }

  const std::string& token(std::size_t index) const { return tokens_[index]; }
  const std::vector<std::string>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.tokens_ == b.tokens_;
  }

 private:
  StringMap<std::size_t> index_;
  std::vector<std::string> tokens_;
};

struct SentenceFields {
  bool premise = false;
  bool hypothesis = true;
};

inline constexpr SentenceFields kHypothesisOnly{false, true};
inline constexpr SentenceFields kPremiseOnly{true, false};
inline constexpr SentenceFields kBothFields{true, true};

// Vocabulary over the selected fields of every pair. Within a pair the
// premise is visited before the hypothesis.
Vocabulary BuildVocabulary(const CorpusSplit& split, SentenceFields fields);

// Sparse bag of in-vocabulary token counts, sorted by index. Every stored
// count is at least one.
class FeatureVector {
 public:
  using Entry = std::pair<std::size_t, std::uint32_t>;

  FeatureVector() = default;

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::uint32_t count(std::size_t index) const;
  std::uint64_t total() const;

  // Adds `n` occurrences of `index`.
  void Add(std::size_t index, std::uint32_t n = 1);

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;

 private:
  std::vector<Entry> entries_;
};

// Out-of-vocabulary tokens are dropped.
FeatureVector Featurize(const TokenSeq& tokens, const Vocabulary& vocab);

}  // namespace hypobias

#endif  // HYPOBIAS_VOCABULARY_H_
