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

#ifndef HYPOBIAS_NAIVE_BAYES_H_
#define HYPOBIAS_NAIVE_BAYES_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "hypobias/corpus.h"
#include "hypobias/label.h"
#include "hypobias/vocabulary.h"

namespace hypobias {

inline constexpr double kDefaultSmoothing = 1.0;

// Multinomial naive Bayes over hypothesis word-unigram counts:
//
//   y_hat = argmax_y  log P(y) + sum_t count(t) * log P(t | y)
//
// with P(t | y) = (count(t, y) + alpha) / (tokens(y) + alpha * |V|).
//
// Labels absent from the training split keep a log prior of -inf and are
// never predicted; their token likelihoods are uniform (1 / |V|).
class NbModel {
 public:
  NbModel(PerLabel<double> class_log_prior,
          PerLabel<std::vector<double>> token_log_likelihood, double alpha,
          Vocabulary vocab);

  const PerLabel<double>& class_log_prior() const { return class_log_prior_; }
  const std::vector<double>& token_log_likelihood(Label label) const {
    return token_log_likelihood_[LabelIndex(label)];
  }
  double smoothing_alpha() const { return alpha_; }
  const Vocabulary& vocab() const { return vocab_; }

  friend bool operator==(const NbModel&, const NbModel&) = default;

 private:
  PerLabel<double> class_log_prior_;
  PerLabel<std::vector<double>> token_log_likelihood_;
  double alpha_;
  Vocabulary vocab_;
};

struct Prediction {
  Label label;
  PerLabel<double> log_score;
};

// Counts are taken from hypothesis sentences only. Tokens outside `vocab`
// are ignored. Fails for an empty split or a non-positive alpha.
absl::StatusOr<NbModel> TrainNb(const CorpusSplit& split,
                                const Vocabulary& vocab,
                                double alpha = kDefaultSmoothing);

// Feature indices must be below model.vocab().size().
Prediction Predict(const NbModel& model, const FeatureVector& features);

// Predicts every hypothesis of `split`, in order.
std::vector<Label> PredictHypotheses(const NbModel& model,
                                     const CorpusSplit& split);

// Index of the maximum score; scores within kTieTolerance of the maximum
// count as tied and resolve to the lowest label ordinal.
inline constexpr double kTieTolerance = 1e-10;
Label ArgmaxLabel(const PerLabel<double>& scores);

std::string NbModelToJson(const NbModel& model);
absl::StatusOr<NbModel> NbModelFromJson(const std::string& text);

// Constant classifier emitting the most frequent training label.
struct BaselineModel {
  Label majority = Label::kEntailment;
  PerLabel<double> label_distribution{};

  friend bool operator==(const BaselineModel&, const BaselineModel&) = default;
};

absl::StatusOr<BaselineModel> TrainBaseline(const CorpusSplit& split);

inline Label PredictBaseline(const BaselineModel& model) {
  return model.majority;
}

double Accuracy(const std::vector<Label>& predictions, const CorpusSplit& gold);

}  // namespace hypobias

#endif  // HYPOBIAS_NAIVE_BAYES_H_
