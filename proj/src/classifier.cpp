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

#include "edumine/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "edumine/error.hpp"

namespace edumine {
namespace {

using nlohmann::json;

std::string label_str(SentimentLabel c) { return std::string(to_string(c)); }

[[noreturn]] void schema(const std::string& field, const std::string& what) {
  throw SchemaError("model file: field '" + field + "': " + what);
}

std::uint64_t as_count(const json& value, const std::string& field) {
  if (!value.is_number_unsigned()) {
    schema(field, "expected a nonnegative integer");
  }
  return value.get<std::uint64_t>();
}

SentimentLabel as_label(const json& value, const std::string& field) {
  if (!value.is_string()) schema(field, "expected a label string");
  auto label = parse_label(value.get_ref<const std::string&>());
  if (!label) {
    schema(field, "unknown label '" + value.get<std::string>() + "'");
  }
  return *label;
}

}  // namespace

NaiveBayesModel::NaiveBayesModel(
    double alpha, std::map<SentimentLabel, std::uint64_t> doc_counts,
    std::map<SentimentLabel, TokenCounts> token_counts)
    : alpha_(alpha),
      doc_counts_(std::move(doc_counts)),
      token_counts_(std::move(token_counts)) {
  if (!(alpha_ > 0.0) || !std::isfinite(alpha_)) {
    throw ConfigError("alpha must be a finite value > 0");
  }
  if (doc_counts_.empty()) throw ConfigError("model has no classes");
  for (const auto& [c, n] : doc_counts_) {
    if (n == 0) {
      throw ConfigError("class '" + label_str(c) + "' has zero documents");
    }
    classes_.push_back(c);
    total_docs_ += n;
    token_counts_[c];  // every class gets a (possibly empty) count map
  }
  for (const auto& [c, counts] : token_counts_) {
    if (!doc_counts_.contains(c)) {
      throw ConfigError("token counts given for class '" + label_str(c) +
                        "' without documents");
    }
    std::uint64_t total = 0;
    for (const auto& [token, n] : counts) {
      total += n;
      vocabulary_.insert(token);
    }
    class_totals_[c] = total;
  }
}

bool NaiveBayesModel::has_class(SentimentLabel c) const {
  return doc_counts_.contains(c);
}

double NaiveBayesModel::prior(SentimentLabel c) const {
  auto it = doc_counts_.find(c);
  if (it == doc_counts_.end()) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(total_docs_);
}

const NaiveBayesModel::TokenCounts& NaiveBayesModel::token_counts(
    SentimentLabel c) const {
  auto it = token_counts_.find(c);
  if (it == token_counts_.end()) {
    throw ConfigError("model has no class '" + label_str(c) + "'");
  }
  return it->second;
}

std::uint64_t NaiveBayesModel::class_token_total(SentimentLabel c) const {
  auto it = class_totals_.find(c);
  return it == class_totals_.end() ? 0 : it->second;
}

std::uint64_t NaiveBayesModel::count(std::string_view token,
                                     SentimentLabel c) const {
  const TokenCounts& counts = token_counts(c);
  auto it = counts.find(token);
  return it == counts.end() ? 0 : it->second;
}

bool NaiveBayesModel::in_vocabulary(std::string_view token) const {
  return vocabulary_.find(token) != vocabulary_.end();
}

double Posterior::evidence() const { return std::exp(log_evidence); }

NaiveBayesModel train(const std::vector<TrainingExample>& corpus,
                      double alpha) {
  if (corpus.empty()) throw ConfigError("training corpus is empty");
  if (!(alpha > 0.0)) throw ConfigError("alpha must be > 0");
  std::map<SentimentLabel, std::uint64_t> doc_counts;
  std::map<SentimentLabel, NaiveBayesModel::TokenCounts> token_counts;
  for (const auto& [doc, label] : corpus) {
    ++doc_counts[label];
    auto& counts = token_counts[label];
    for (const Token& t : doc.tokens) ++counts[t.surface];
  }
  return NaiveBayesModel(alpha, std::move(doc_counts),
                         std::move(token_counts));
}

double log_likelihood(const NaiveBayesModel& model, std::string_view token,
                      SentimentLabel c) {
  if (!model.has_class(c)) {
    throw ConfigError("model has no class '" + label_str(c) + "'");
  }
  if (!model.in_vocabulary(token)) {
    throw ConfigError("token '" + std::string(token) +
                      "' is outside the vocabulary");
  }
  const double numerator =
      static_cast<double>(model.count(token, c)) + model.alpha();
  const double denominator =
      static_cast<double>(model.class_token_total(c)) +
      model.alpha() * static_cast<double>(model.vocabulary().size());
  return std::log(numerator / denominator);
}

SentimentLabel argmax(const std::map<SentimentLabel, double>& scores) {
  SentimentLabel best = SentimentLabel::kNeutral;
  double best_score = -std::numeric_limits<double>::infinity();
  bool first = true;
  for (const auto& [c, s] : scores) {  // map order is canonical order
    if (first || s > best_score) {
      best = c;
      best_score = s;
      first = false;
    }
  }
  return best;
}

Posterior posterior(const NaiveBayesModel& model,
                    const ProcessedDocument& doc) {
  Posterior out;
  for (SentimentLabel c : model.classes()) {
    double score = std::log(model.prior(c));
    for (const Token& t : doc.tokens) {
      if (model.in_vocabulary(t.surface)) {
        score += log_likelihood(model, t.surface, c);
      }
    }
    out.log_joint[c] = score;
  }
  double peak = -std::numeric_limits<double>::infinity();
  for (const auto& [c, s] : out.log_joint) peak = std::max(peak, s);
  double sum = 0.0;
  for (const auto& [c, s] : out.log_joint) sum += std::exp(s - peak);
  out.log_evidence = peak + std::log(sum);
  for (const auto& [c, s] : out.log_joint) {
    out.scores[c] = std::exp(s - out.log_evidence);
  }
  out.predicted = argmax(out.scores);
  return out;
}

SentimentLabel classify(const NaiveBayesModel& model,
                        const ProcessedDocument& doc) {
  return posterior(model, doc).predicted;
}

std::string model_to_json(const NaiveBayesModel& model) {
  json doc;  // std::map-backed: keys serialize sorted
  doc["version"] = kModelFormatVersion;
  doc["alpha"] = model.alpha();
  json classes = json::array();
  json doc_counts = json::object();
  json token_counts = json::object();
  for (SentimentLabel c : model.classes()) {
    classes.push_back(label_str(c));
    doc_counts[label_str(c)] = model.doc_counts().at(c);
    json counts = json::object();
    for (const auto& [token, n] : model.token_counts(c)) counts[token] = n;
    token_counts[label_str(c)] = std::move(counts);
  }
  doc["classes"] = std::move(classes);
  doc["doc_counts"] = std::move(doc_counts);
  doc["token_counts"] = std::move(token_counts);
  return doc.dump(2) + "\n";
}

NaiveBayesModel model_from_json(std::string_view json_text) {
  json doc = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw SchemaError("model file: not a JSON document");
  }
  if (!doc.is_object()) throw SchemaError("model file: expected an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "version" && key != "alpha" && key != "classes" &&
        key != "doc_counts" && key != "token_counts" && key != "priors") {
      schema(key, "unexpected field");
    }
  }
  for (const char* required :
       {"version", "alpha", "classes", "doc_counts", "token_counts"}) {
    if (!doc.contains(required)) schema(required, "missing");
  }
  if (!doc["version"].is_number_integer() ||
      doc["version"].get<std::int64_t>() != kModelFormatVersion) {
    schema("version", "unsupported version " + doc["version"].dump());
  }
  const json& alpha = doc["alpha"];
  if (!alpha.is_number() || !(alpha.get<double>() > 0.0) ||
      !std::isfinite(alpha.get<double>())) {
    schema("alpha", "expected a finite number > 0");
  }

  const json& classes = doc["classes"];
  if (!classes.is_array() || classes.empty()) {
    schema("classes", "expected a nonempty array");
  }
  std::vector<SentimentLabel> labels;
  for (const json& c : classes) {
    SentimentLabel l = as_label(c, "classes");
    if (!labels.empty() && l <= labels.back()) {
      schema("classes", "labels must be unique and in canonical order");
    }
    labels.push_back(l);
  }

  const json& doc_counts_json = doc["doc_counts"];
  if (!doc_counts_json.is_object()) schema("doc_counts", "expected an object");
  if (doc_counts_json.size() != labels.size()) {
    schema("doc_counts", "keys must equal 'classes'");
  }
  std::map<SentimentLabel, std::uint64_t> doc_counts;
  for (SentimentLabel l : labels) {
    const std::string field = "doc_counts." + label_str(l);
    if (!doc_counts_json.contains(label_str(l))) schema(field, "missing");
    const std::uint64_t n = as_count(doc_counts_json[label_str(l)], field);
    if (n == 0) schema(field, "must be >= 1");
    doc_counts[l] = n;
  }

  const json& token_json = doc["token_counts"];
  if (!token_json.is_object()) schema("token_counts", "expected an object");
  if (token_json.size() != labels.size()) {
    schema("token_counts", "keys must equal 'classes'");
  }
  std::map<SentimentLabel, NaiveBayesModel::TokenCounts> token_counts;
  for (SentimentLabel l : labels) {
    const std::string field = "token_counts." + label_str(l);
    if (!token_json.contains(label_str(l))) schema(field, "missing");
    const json& counts = token_json[label_str(l)];
    if (!counts.is_object()) schema(field, "expected an object");
    auto& dest = token_counts[l];
    for (const auto& [token, n] : counts.items()) {
      if (token.empty()) schema(field, "empty token");
      dest.emplace(token, as_count(n, field + "." + token));
    }
  }

  NaiveBayesModel model(alpha.get<double>(), std::move(doc_counts),
                        std::move(token_counts));

  // Priors are derived from doc_counts; a stored copy must agree.
  if (doc.contains("priors")) {
    const json& priors = doc["priors"];
    if (!priors.is_object()) schema("priors", "expected an object");
    double sum = 0.0;
    for (const auto& [key, p] : priors.items()) {
      if (!p.is_number()) schema("priors." + key, "expected a number");
      sum += p.get<double>();
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      schema("priors", "values sum to " + std::to_string(sum) + ", not 1");
    }
    for (SentimentLabel l : labels) {
      const std::string field = "priors." + label_str(l);
      if (!priors.contains(label_str(l)) ||
          std::abs(priors[label_str(l)].get<double>() - model.prior(l)) >
              1e-12) {
        schema(field, "disagrees with doc_counts");
      }
    }
    if (priors.size() != labels.size()) {
      schema("priors", "keys must equal 'classes'");
    }
  }
  return model;
}

void save_model(const NaiveBayesModel& model,
                const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << model_to_json(model);
  if (!out) throw IoError("write failure on '" + path.string() + "'");
}

NaiveBayesModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return model_from_json(buf.str());
  } catch (const SchemaError& e) {
    throw SchemaError(path.string() + ": " + e.what());
  } catch (const ConfigError& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

}  // namespace edumine
