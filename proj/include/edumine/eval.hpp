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

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "edumine/classifier.hpp"

namespace edumine {

/// cells[i][j] = documents with gold labels[i] predicted as labels[j].
struct ConfusionMatrix {
  std::vector<SentimentLabel> labels;
  std::vector<std::vector<std::uint64_t>> cells;

  std::uint64_t total() const;
  std::size_t index_of(SentimentLabel label) const;  // throws if absent
  bool operator==(const ConfusionMatrix&) const = default;
};

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct Metrics {
  std::map<SentimentLabel, ClassMetrics> per_class;
  double accuracy = 0.0;
  double macro_f1 = 0.0;
};

/// Rows and columns cover the model's classes plus any gold label the model
/// never saw, in canonical order. Throws ConfigError on an empty test set.
ConfusionMatrix confusion(const NaiveBayesModel& model,
                          const std::vector<TrainingExample>& test);

/// Builds a matrix from (gold, predicted) pairs over `labels`.
ConfusionMatrix confusion_from_pairs(
    std::vector<SentimentLabel> labels,
    const std::vector<std::pair<SentimentLabel, SentimentLabel>>& pairs);

/// Every 0/0 ratio is reported as 0.
Metrics metrics(const ConfusionMatrix& cm);

/// Aligned text table.
void write_metrics_table(std::ostream& out, const ConfusionMatrix& cm,
                         const Metrics& m);
/// CSV "class,precision,recall,f1", then "accuracy,<v>,," and
/// "macro_f1,<v>,," rows; values with 6 decimals.
void write_metrics_csv(std::ostream& out, const Metrics& m);

}  // namespace edumine
