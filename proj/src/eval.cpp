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

#include "edumine/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "edumine/error.hpp"

namespace edumine {
namespace {

double ratio(std::uint64_t num, std::uint64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::string fixed6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::uint64_t ConfusionMatrix::total() const {
  std::uint64_t sum = 0;
  for (const auto& row : cells) {
    for (std::uint64_t v : row) sum += v;
  }
  return sum;
}

std::size_t ConfusionMatrix::index_of(SentimentLabel label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    throw ConfigError("label '" + std::string(to_string(label)) +
                      "' not in confusion matrix");
  }
  return static_cast<std::size_t>(it - labels.begin());
}

ConfusionMatrix confusion_from_pairs(
    std::vector<SentimentLabel> labels,
    const std::vector<std::pair<SentimentLabel, SentimentLabel>>& pairs) {
  ConfusionMatrix cm;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  cm.labels = std::move(labels);
  cm.cells.assign(cm.labels.size(),
                  std::vector<std::uint64_t>(cm.labels.size(), 0));
  for (const auto& [gold, predicted] : pairs) {
    ++cm.cells[cm.index_of(gold)][cm.index_of(predicted)];
  }
  return cm;
}

ConfusionMatrix confusion(const NaiveBayesModel& model,
                          const std::vector<TrainingExample>& test) {
  if (test.empty()) throw ConfigError("test set is empty");
  std::vector<SentimentLabel> labels = model.classes();
  std::vector<std::pair<SentimentLabel, SentimentLabel>> pairs;
  pairs.reserve(test.size());
  for (const auto& [doc, gold] : test) {
    labels.push_back(gold);
    pairs.emplace_back(gold, classify(model, doc));
  }
  return confusion_from_pairs(std::move(labels), pairs);
}

Metrics metrics(const ConfusionMatrix& cm) {
  Metrics m;
  const std::size_t n = cm.labels.size();
  std::uint64_t trace = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t tp = cm.cells[i][i];
    std::uint64_t predicted = 0, gold = 0;
    for (std::size_t k = 0; k < n; ++k) {
      predicted += cm.cells[k][i];
      gold += cm.cells[i][k];
    }
    ClassMetrics c;
    c.precision = ratio(tp, predicted);
    c.recall = ratio(tp, gold);
    const double denom = c.precision + c.recall;
    c.f1 = denom == 0.0 ? 0.0 : 2.0 * c.precision * c.recall / denom;
    m.per_class[cm.labels[i]] = c;
    trace += tp;
    m.macro_f1 += c.f1;
  }
  m.accuracy = ratio(trace, cm.total());
  m.macro_f1 = n == 0 ? 0.0 : m.macro_f1 / static_cast<double>(n);
  return m;
}

void write_metrics_table(std::ostream& out, const ConfusionMatrix& cm,
                         const Metrics& m) {
  char line[128];
  out << "confusion matrix (rows: gold, columns: predicted)\n";
  std::snprintf(line, sizeof line, "%-10s", "");
  out << line;
  for (SentimentLabel l : cm.labels) {
    std::snprintf(line, sizeof line, "%10s", std::string(to_string(l)).c_str());
    out << line;
  }
  out << '\n';
  for (std::size_t i = 0; i < cm.labels.size(); ++i) {
    std::snprintf(line, sizeof line, "%-10s",
                  std::string(to_string(cm.labels[i])).c_str());
    out << line;
    for (std::uint64_t v : cm.cells[i]) {
      std::snprintf(line, sizeof line, "%10llu",
                    static_cast<unsigned long long>(v));
      out << line;
    }
    out << '\n';
  }
  out << '\n';
  std::snprintf(line, sizeof line, "%-10s %10s %10s %10s\n", "class",
                "precision", "recall", "f1");
  out << line;
  for (const auto& [label, c] : m.per_class) {
    std::snprintf(line, sizeof line, "%-10s %10.6f %10.6f %10.6f\n",
                  std::string(to_string(label)).c_str(), c.precision,
                  c.recall, c.f1);
    out << line;
  }
  std::snprintf(line, sizeof line, "%-10s %10.6f\n", "accuracy", m.accuracy);
  out << line;
  std::snprintf(line, sizeof line, "%-10s %10.6f\n", "macro_f1", m.macro_f1);
  out << line;
  out << "(undefined 0/0 ratios are reported as 0)\n";
}

void write_metrics_csv(std::ostream& out, const Metrics& m) {
  out << "class,precision,recall,f1\n";
  for (const auto& [label, c] : m.per_class) {
    out << to_string(label) << ',' << fixed6(c.precision) << ','
        << fixed6(c.recall) << ',' << fixed6(c.f1) << '\n';
  }
  out << "accuracy," << fixed6(m.accuracy) << ",,\n";
  out << "macro_f1," << fixed6(m.macro_f1) << ",,\n";
}

}  // namespace edumine
