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

#include "hypobias/naive_bayes.h"

#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>

#include "hypobias/string_util.h"
#include "json.hpp"

namespace hypobias {
namespace {

using json = nlohmann::json;

constexpr int kSchemaVersion = 1;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

json LogProbToJson(double value) {
  return std::isfinite(value) ? json(value) : json(nullptr);
}

}  // namespace

NbModel::NbModel(PerLabel<double> class_log_prior,
                 PerLabel<std::vector<double>> token_log_likelihood,
                 double alpha, Vocabulary vocab)
    : class_log_prior_(class_log_prior),
      token_log_likelihood_(std::move(token_log_likelihood)),
      alpha_(alpha),
      vocab_(std::move(vocab)) {}

absl::StatusOr<NbModel> TrainNb(const CorpusSplit& split,
                                const Vocabulary& vocab, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    return absl::InvalidArgumentError(
        StrCat("smoothing alpha must be positive, got ", alpha));
  }
  if (split.empty()) {
    return absl::InvalidArgumentError(
        "cannot train naive Bayes on an empty split");
  }
  const std::size_t v = vocab.size();
  PerLabel<std::uint64_t> label_counts{};
  PerLabel<std::vector<std::uint64_t>> token_counts;
  for (auto& counts : token_counts) counts.assign(v, 0);
  PerLabel<std::uint64_t> label_tokens{};

  for (const SentencePair& pair : split.pairs) {
    const std::size_t y = LabelIndex(pair.label);
    ++label_counts[y];
    for (const std::string& token : Tokenize(pair.hypothesis)) {
      if (auto index = vocab.Find(token)) {
        ++token_counts[y][*index];
        ++label_tokens[y];
      }
    }
  }

  const double n = static_cast<double>(split.size());
  PerLabel<double> log_prior;
  PerLabel<std::vector<double>> log_likelihood;
  for (std::size_t y = 0; y < kNumLabels; ++y) {
    log_prior[y] = label_counts[y] == 0
                       ? kNegInf
                       : std::log(static_cast<double>(label_counts[y]) / n);
    const double log_denominator = std::log(
        static_cast<double>(label_tokens[y]) + alpha * static_cast<double>(v));
    log_likelihood[y].resize(v);
    for (std::size_t t = 0; t < v; ++t) {
      log_likelihood[y][t] =
          std::log(static_cast<double>(token_counts[y][t]) + alpha) -
          log_denominator;
    }
  }
  return NbModel(log_prior, std::move(log_likelihood), alpha, vocab);
}

Label ArgmaxLabel(const PerLabel<double>& scores) {
  double best = kNegInf;
  for (double s : scores) best = std::max(best, s);
  for (Label label : kAllLabels) {
    const double s = scores[LabelIndex(label)];
    if (s == best || (std::isfinite(s) && best - s <= kTieTolerance)) {
      return label;
    }
  }
  return Label::kEntailment;
}

Prediction Predict(const NbModel& model, const FeatureVector& features) {
  Prediction prediction;
  for (Label label : kAllLabels) {
    const std::size_t y = LabelIndex(label);
    double score = model.class_log_prior()[y];
    if (std::isfinite(score)) {
      const std::vector<double>& ll = model.token_log_likelihood(label);
      for (const auto& [index, count] : features.entries()) {
        score += static_cast<double>(count) * ll[index];
      }
    }
    prediction.log_score[y] = score;
  }
  prediction.label = ArgmaxLabel(prediction.log_score);
  return prediction;
}

std::vector<Label> PredictHypotheses(const NbModel& model,
                                     const CorpusSplit& split) {
  std::vector<Label> labels;
  labels.reserve(split.size());
  for (const SentencePair& pair : split.pairs) {
    labels.push_back(
        Predict(model, Featurize(Tokenize(pair.hypothesis), model.vocab()))
            .label);
  }
  return labels;
}

std::string NbModelToJson(const NbModel& model) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["alpha"] = model.smoothing_alpha();
  json labels = json::array();
  json priors = json::array();
  json likelihoods = json::array();
  for (Label label : kAllLabels) {
    labels.push_back(LabelName(label));
    priors.push_back(LogProbToJson(model.class_log_prior()[LabelIndex(label)]));
    likelihoods.push_back(model.token_log_likelihood(label));
  }
  doc["labels"] = std::move(labels);
  doc["log_priors"] = std::move(priors);
  doc["vocab"] = model.vocab().tokens();
  doc["log_likelihoods"] = std::move(likelihoods);
  return doc.dump();
}

absl::StatusOr<NbModel> NbModelFromJson(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    return absl::InvalidArgumentError("model document is not a JSON object");
  }
  try {
    if (doc.at("schema_version").get<int>() != kSchemaVersion) {
      return absl::InvalidArgumentError(
          StrCat("unsupported model schema_version ",
                 doc.at("schema_version").dump()));
    }
    const double alpha = doc.at("alpha").get<double>();
    const json& labels = doc.at("labels");
    const json& priors = doc.at("log_priors");
    const json& likelihoods = doc.at("log_likelihoods");
    if (labels.size() != kNumLabels || priors.size() != kNumLabels ||
        likelihoods.size() != kNumLabels) {
      return absl::InvalidArgumentError("model must cover exactly 3 labels");
    }
    auto vocab =
        Vocabulary::FromTokens(doc.at("vocab").get<std::vector<std::string>>());
    if (!vocab.has_value()) {
      return absl::InvalidArgumentError("model vocabulary repeats a token");
    }
    PerLabel<double> log_prior{};
    PerLabel<std::vector<double>> log_likelihood;
    for (std::size_t i = 0; i < kNumLabels; ++i) {
      auto label = ParseLabel(labels[i].get<std::string>());
      if (!label.has_value()) {
        return absl::InvalidArgumentError(
            StrCat("unknown label ", labels[i].dump()));
      }
      const std::size_t y = LabelIndex(*label);
      log_prior[y] = priors[i].is_null() ? kNegInf : priors[i].get<double>();
      log_likelihood[y] = likelihoods[i].get<std::vector<double>>();
      if (log_likelihood[y].size() != vocab->size()) {
        return absl::InvalidArgumentError(
            "likelihood row length differs from vocabulary size");
      }
    }
    return NbModel(log_prior, std::move(log_likelihood), alpha,
                   *std::move(vocab));
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(
        StrCat("malformed model document: ", e.what()));
  }
}

absl::StatusOr<BaselineModel> TrainBaseline(const CorpusSplit& split) {
  if (split.empty()) {
    return absl::InvalidArgumentError(
        "cannot fit the majority baseline on an empty split");
  }
  const PerLabel<std::size_t> counts = LabelHistogram(split);
  BaselineModel model;
  std::size_t best = 0;
  for (Label label : kAllLabels) {
    const std::size_t c = counts[LabelIndex(label)];
    model.label_distribution[LabelIndex(label)] =
        static_cast<double>(c) / static_cast<double>(split.size());
    if (c > best) {
      best = c;
      model.majority = label;
    }
  }
  return model;
}

double Accuracy(const std::vector<Label>& predictions,
                const CorpusSplit& gold) {
  if (gold.empty()) return 0.0;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < gold.size() && i < predictions.size(); ++i) {
    correct += predictions[i] == gold.pairs[i].label ? 1 : 0;
  }
  return static_cast<double>(correct) / static_cast<double>(gold.size());
}

}  // namespace hypobias
