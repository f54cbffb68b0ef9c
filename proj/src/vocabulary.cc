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

#include "hypobias/vocabulary.h"

#include <algorithm>

namespace hypobias {

std::optional<Vocabulary> Vocabulary::FromTokens(
    std::vector<std::string> tokens) {
  Vocabulary vocab;
  for (std::string& token : tokens) {
    if (vocab.Contains(token)) return std::nullopt;
    vocab.Add(token);
  }
  return vocab;
}

std::size_t Vocabulary::Add(std::string_view token) {
  if (auto it = index_.find(token); it != index_.end()) return it->second;
  index_.emplace(std::string(token), tokens_.size());
  tokens_.emplace_back(token);
  return tokens_.size() - 1;
}

std::optional<std::size_t> Vocabulary::Find(std::string_view token) const {
  auto it = index_.find(token);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vocabulary BuildVocabulary(const CorpusSplit& split, SentenceFields fields) {
  Vocabulary vocab;
  for (const SentencePair& pair : split.pairs) {
    if (fields.premise) {
      for (const std::string& token : Tokenize(pair.premise)) vocab.Add(token);
    }
    if (fields.hypothesis) {
      for (const std::string& token : Tokenize(pair.hypothesis)) {
        vocab.Add(token);
      }
    }
  }
  return vocab;
}

std::uint32_t FeatureVector::count(std::size_t index) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const Entry& e, std::size_t i) { return e.first < i; });
  return it != entries_.end() && it->first == index ? it->second : 0;
}

std::uint64_t FeatureVector::total() const {
  std::uint64_t sum = 0;
  for (const Entry& e : entries_) sum += e.second;
  return sum;
}

void FeatureVector::Add(std::size_t index, std::uint32_t n) {
  if (n == 0) return;
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) {
    it->second += n;
  } else {
    entries_.insert(it, Entry{index, n});
  }
}

FeatureVector Featurize(const TokenSeq& tokens, const Vocabulary& vocab) {
  FeatureVector features;
  for (const std::string& token : tokens) {
    if (auto index = vocab.Find(token)) features.Add(*index);
  }
  return features;
}

}  // namespace hypobias
