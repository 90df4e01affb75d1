// Copyright 2026 The edumine Authors
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

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edumine/label.hpp"
#include "edumine/preprocess.hpp"

namespace edumine {

using TrainingExample = std::pair<ProcessedDocument, SentimentLabel>;

/// Multinomial unigram Naive Bayes with additive (Laplace) smoothing.
///
/// Priors P(s) are document frequencies; the per-class token likelihood is
/// (count(t, s) + alpha) / (total(s) + alpha * |V|). Instances are immutable
/// once built and safe to share across threads.
class NaiveBayesModel {
 public:
  using TokenCounts = std::map<std::string, std::uint64_t, std::less<>>;

  /// Builds a model from raw counts and checks every invariant. `classes`
  /// are the keys of `doc_counts`. Throws ConfigError on alpha <= 0, an
  /// empty class set, a zero document count, or token_counts keyed by a
  /// class without documents.
  NaiveBayesModel(double alpha,
                  std::map<SentimentLabel, std::uint64_t> doc_counts,
                  std::map<SentimentLabel, TokenCounts> token_counts);

  /// Classes observed in training, canonical order.
  const std::vector<SentimentLabel>& classes() const { return classes_; }
  bool has_class(SentimentLabel c) const;
  double alpha() const { return alpha_; }
  const std::map<SentimentLabel, std::uint64_t>& doc_counts() const {
    return doc_counts_;
  }
  std::uint64_t total_docs() const { return total_docs_; }
  double prior(SentimentLabel c) const;
  const TokenCounts& token_counts(SentimentLabel c) const;
  std::uint64_t class_token_total(SentimentLabel c) const;
  std::uint64_t count(std::string_view token, SentimentLabel c) const;
  const std::set<std::string, std::less<>>& vocabulary() const {
    return vocabulary_;
  }
  bool in_vocabulary(std::string_view token) const;

  bool operator==(const NaiveBayesModel&) const = default;

 private:
  double alpha_;
  std::vector<SentimentLabel> classes_;
  std::map<SentimentLabel, std::uint64_t> doc_counts_;
  std::map<SentimentLabel, TokenCounts> token_counts_;
  std::map<SentimentLabel, std::uint64_t> class_totals_;
  std::set<std::string, std::less<>> vocabulary_;
  std::uint64_t total_docs_ = 0;
};

struct Posterior {
  std::map<SentimentLabel, double> scores;        // P(s | M), sums to 1
  std::map<SentimentLabel, double> log_joint;     // ln P(s) + ln P(M | s)
  double log_evidence = 0.0;                      // ln P(M)
  SentimentLabel predicted = SentimentLabel::kNeutral;

  /// P(M) = sum over classes of P(s) P(M | s). May underflow to 0 for long
  /// documents; prefer log_evidence.
  double evidence() const;
};

/// Throws ConfigError on an empty corpus or alpha <= 0.
NaiveBayesModel train(const std::vector<TrainingExample>& corpus,
                      double alpha = 1.0);

/// ln P(token | c). Throws ConfigError for a class the model lacks or a
/// token outside the vocabulary.
double log_likelihood(const NaiveBayesModel& model, std::string_view token,
                      SentimentLabel c);

/// Out-of-vocabulary tokens are skipped; an empty document yields the
/// priors.
Posterior posterior(const NaiveBayesModel& model,
                    const ProcessedDocument& doc);

SentimentLabel classify(const NaiveBayesModel& model,
                        const ProcessedDocument& doc);

/// Index of the largest value; ties go to the earliest (canonical order).
SentimentLabel argmax(const std::map<SentimentLabel, double>& scores);

inline constexpr int kModelFormatVersion = 1;

/// Versioned JSON with sorted keys. Deterministic for a given model.
std::string model_to_json(const NaiveBayesModel& model);
/// Throws SchemaError naming the offending field.
NaiveBayesModel model_from_json(std::string_view json_text);

void save_model(const NaiveBayesModel& model,
                const std::filesystem::path& path);
NaiveBayesModel load_model(const std::filesystem::path& path);

}  // namespace edumine
