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

#include "edumine/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "edumine/error.hpp"

namespace edumine {
namespace {

using nlohmann::json;

std::string fixed6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << body;
  if (!out) throw IoError("write failure on '" + path.string() + "'");
}

std::filesystem::path resolve(const std::filesystem::path& base,
                              const std::string& value) {
  std::filesystem::path p(value);
  return p.is_absolute() ? p : base / p;
}

void require_file(const std::optional<std::filesystem::path>& path,
                  const char* field) {
  if (path && !std::filesystem::is_regular_file(*path)) {
    throw ConfigError("config: '" + std::string(field) + "': no such file '" +
                      path->string() + "'");
  }
}

}  // namespace

// ---------------------------------------------------------------- config

std::filesystem::path PipelineConfig::model_path() const {
  return model ? *model : out_dir / "model.json";
}

void PipelineConfig::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw ConfigError("config: 'alpha' must be > 0, got " + fixed6(alpha));
  }
  if (!(split_fraction > 0.0 && split_fraction < 1.0)) {
    throw ConfigError("config: 'split.fraction' must lie in (0, 1), got " +
                      fixed6(split_fraction));
  }
  require_file(corpus, "corpus");
  require_file(stopwords, "stopwords");
  require_file(spell_lexicon, "spell_lexicon");
  require_file(lemmas, "lemmas");
  require_file(tag_lexicon, "tag_lexicon");
  require_file(taxonomy, "taxonomy");
}

PipelineConfig parse_config(std::string_view json_text,
                            const std::filesystem::path& base_dir) {
  json doc = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw SchemaError("config: expected a JSON object");
  }
  PipelineConfig cfg;
  const auto path_field = [&](const std::string& key, const json& value)
      -> std::filesystem::path {
    if (!value.is_string() || value.get_ref<const std::string&>().empty()) {
      throw SchemaError("config: '" + key + "' must be a nonempty string");
    }
    return resolve(base_dir, value.get<std::string>());
  };
  for (const auto& [key, value] : doc.items()) {
    if (key == "corpus") {
      cfg.corpus = path_field(key, value);
    } else if (key == "stopwords") {
      cfg.stopwords = path_field(key, value);
    } else if (key == "spell_lexicon") {
      cfg.spell_lexicon = path_field(key, value);
    } else if (key == "lemmas") {
      cfg.lemmas = path_field(key, value);
    } else if (key == "tag_lexicon") {
      cfg.tag_lexicon = path_field(key, value);
    } else if (key == "taxonomy") {
      cfg.taxonomy = path_field(key, value);
    } else if (key == "model") {
      cfg.model = path_field(key, value);
    } else if (key == "out_dir") {
      cfg.out_dir = path_field(key, value);
    } else if (key == "alpha") {
      if (!value.is_number()) throw SchemaError("config: 'alpha' must be a number");
      cfg.alpha = value.get<double>();
    } else if (key == "split") {
      if (!value.is_object()) throw SchemaError("config: 'split' must be an object");
      for (const auto& [k, v] : value.items()) {
        if (k == "fraction") {
          if (!v.is_number()) {
            throw SchemaError("config: 'split.fraction' must be a number");
          }
          cfg.split_fraction = v.get<double>();
        } else if (k == "seed") {
          if (!v.is_number_unsigned()) {
            throw SchemaError(
                "config: 'split.seed' must be a nonnegative integer");
          }
          cfg.seed = v.get<std::uint64_t>();
        } else {
          throw SchemaError("config: unknown key 'split." + k + "'");
        }
      }
    } else if (key == "stages") {
      if (!value.is_object()) throw SchemaError("config: 'stages' must be an object");
      for (const auto& [k, v] : value.items()) {
        if (!v.is_boolean()) {
          throw SchemaError("config: 'stages." + k + "' must be a boolean");
        }
        const bool on = v.get<bool>();
        if (k == kStageCaseFold) {
          cfg.stages.case_fold = on;
        } else if (k == kStageTokenize) {
          cfg.stages.tokenize = on;
        } else if (k == kStageSpellCorrect) {
          cfg.stages.spell_correct = on;
        } else if (k == kStageRemoveStopwords) {
          cfg.stages.remove_stopwords = on;
        } else if (k == kStageStem) {
          cfg.stages.stem = on;
        } else {
          throw SchemaError("config: unknown stage 'stages." + k + "'");
        }
      }
    } else {
      throw SchemaError("config: unknown key '" + key + "'");
    }
  }
  return cfg;
}

PipelineConfig load_config(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  std::filesystem::path base = path.parent_path();
  if (base.empty()) base = ".";
  try {
    return parse_config(text, base);
  } catch (const SchemaError& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

Resources Resources::load(const PipelineConfig& config) {
  Resources r;
  r.stopwords = config.stopwords ? StopwordList::load(*config.stopwords)
                                 : StopwordList::english();
  if (config.spell_lexicon) r.spell = SpellLexicon::load(*config.spell_lexicon);
  r.lemmas = config.lemmas ? load_lemma_exceptions(*config.lemmas)
                           : default_lemma_exceptions();
  r.tags = config.tag_lexicon ? load_tag_lexicon(*config.tag_lexicon)
                              : default_tag_lexicon();
  if (config.stages.stem) r.tags = with_stemmed_keys(r.tags, r.lemmas);
  if (config.taxonomy) r.seeds = load_seeds(*config.taxonomy);
  return r;
}

PreprocessConfig Resources::preprocess_config(
    const StageToggles& stages) const {
  return PreprocessConfig{stages, &stopwords, &spell, &lemmas};
}

// ---------------------------------------------------------------- commands

Pipeline::Pipeline(PipelineConfig config, std::ostream& out, std::ostream& err)
    : config_(std::move(config)), out_(out), err_(err) {
  config_.validate();
}

const Resources& Pipeline::resources() {
  if (!resources_) {
    resources_ = Resources::load(config_);
    if (config_.stages.stem) {
      for (const auto& [category, nouns] : resources_->seeds) {
        for (const std::string& noun : nouns) {
          const std::string stemmed =
              stem(Token{noun, 0}, resources_->lemmas).surface;
          if (stemmed != noun) {
            err_ << "edumine: warning: seed '" << noun << "' in category '"
                 << category << "' is not its own stem ('" << stemmed
                 << "'); it only matches tokens that stem to it\n";
          }
        }
      }
    }
  }
  return *resources_;
}

SkipLogger Pipeline::skip_logger(const std::filesystem::path& path) {
  return [this, name = path.generic_string()](std::size_t line,
                                              std::string_view reason) {
    err_ << name << ':' << line << ": skipped: " << reason << '\n';
  };
}

const LabeledCorpus& Pipeline::corpus() {
  if (!corpus_) {
    if (!config_.corpus) throw ConfigError("config: 'corpus' is required");
    corpus_ = ingest_jsonl(*config_.corpus, skip_logger(*config_.corpus));
  }
  return *corpus_;
}

std::vector<TrainingExample> Pipeline::preprocess_labeled(
    const LabeledCorpus& c) {
  const PreprocessConfig pc = resources().preprocess_config(config_.stages);
  std::vector<TrainingExample> out;
  out.reserve(c.records.size());
  for (const FeedbackRecord& rec : c.records) {
    out.emplace_back(preprocess_document(rec, pc), *rec.label);
  }
  return out;
}

LabeledCorpus Pipeline::ingest() {
  const LabeledCorpus& c = corpus();
  std::map<SentimentLabel, std::size_t> labels;
  std::map<std::string, std::size_t> sources;
  std::size_t unlabeled = 0;
  for (const FeedbackRecord& rec : c.records) {
    if (rec.label) {
      ++labels[*rec.label];
    } else {
      ++unlabeled;
    }
    ++sources[rec.source];
  }
  out_ << "records: " << c.records.size() << '\n'
       << "skipped: " << c.skipped << '\n';
  for (SentimentLabel l : kAllLabels) {
    out_ << "label " << to_string(l) << ": " << labels[l] << '\n';
  }
  out_ << "unlabeled: " << unlabeled << '\n';
  for (const auto& [source, n] : sources) {
    out_ << "source " << source << ": " << n << '\n';
  }
  return c;
}

NaiveBayesModel Pipeline::train() {
  auto [train_split, test_split] =
      split(corpus(), config_.split_fraction, config_.seed);
  NaiveBayesModel model = edumine::train(preprocess_labeled(train_split),
                                         config_.alpha);
  std::filesystem::create_directories(config_.model_path().parent_path());
  save_model(model, config_.model_path());
  out_ << "trained on " << train_split.records.size() << " of "
       << corpus().records.size() << " records (held out "
       << test_split.records.size() << ")\n";
  for (SentimentLabel c : model.classes()) {
    out_ << "prior " << to_string(c) << ": " << fixed6(model.prior(c))
         << '\n';
  }
  out_ << "vocabulary: " << model.vocabulary().size() << '\n'
       << "model: " << config_.model_path().generic_string() << '\n';
  return model;
}

namespace {

void print_posterior(std::ostream& out, const Posterior& p) {
  out << to_string(p.predicted);
  for (const auto& [c, s] : p.scores) {
    out << '\t' << to_string(c) << '=' << fixed6(s);
  }
  out << '\n';
}

}  // namespace

void Pipeline::classify_text(std::string_view text) {
  const NaiveBayesModel model = load_model(config_.model_path());
  const PreprocessConfig pc = resources().preprocess_config(config_.stages);
  print_posterior(out_, posterior(model, preprocess_text(text, pc)));
}

void Pipeline::classify_jsonl(const std::filesystem::path& path) {
  const NaiveBayesModel model = load_model(config_.model_path());
  const PreprocessConfig pc = resources().preprocess_config(config_.stages);
  const LabeledCorpus input = ingest_jsonl(path, skip_logger(path));
  for (const FeedbackRecord& rec : input.records) {
    out_ << rec.id << '\t';
    print_posterior(out_, posterior(model, preprocess_document(rec, pc)));
  }
}

Metrics Pipeline::evaluate() {
  const NaiveBayesModel model = load_model(config_.model_path());
  auto [train_split, test_split] =
      split(corpus(), config_.split_fraction, config_.seed);
  const ConfusionMatrix cm = confusion(model, preprocess_labeled(test_split));
  const Metrics m = metrics(cm);
  std::ostringstream table, csv;
  write_metrics_table(table, cm, m);
  write_metrics_csv(csv, m);
  std::filesystem::create_directories(config_.out_dir);
  write_file(config_.out_dir / kMetricsTxt, table.str());
  write_file(config_.out_dir / kMetricsCsv, csv.str());
  out_ << "evaluated " << test_split.records.size() << " held-out records\n"
       << table.str();
  return m;
}

AspectSentimentSummary Pipeline::report() {
  const NaiveBayesModel model = load_model(config_.model_path());
  const Resources& res = resources();
  const PreprocessConfig pc = res.preprocess_config(config_.stages);

  std::vector<TaggedDocument> tagged;
  std::vector<SentimentLabel> predicted;
  for (const FeedbackRecord& rec : corpus().records) {
    const ProcessedDocument doc = preprocess_document(rec, pc);
    predicted.push_back(classify(model, doc));
    tagged.emplace_back(rec.id, pos_tag(filter_alphabetic(doc.tokens), res.tags));
  }
  const NounIndex index = index_nouns(tagged);
  const AspectTaxonomy taxonomy = formulate_taxonomy(index, res.seeds);

  std::vector<ClassifiedDocument> classified;
  for (std::size_t i = 0; i < tagged.size(); ++i) {
    classified.push_back(ClassifiedDocument{
        tagged[i].first, predicted[i],
        assign_aspects(tagged[i].second, taxonomy)});
  }
  AspectSentimentSummary summary = aggregate(classified);

  json tax;
  tax["categories"] = json::object();
  for (const auto& [category, nouns] : taxonomy.categories) {
    tax["categories"][category] = nouns;
  }
  tax["uncategorized"] = taxonomy.uncategorized;

  std::filesystem::create_directories(config_.out_dir);
  emit_csv(summary, config_.out_dir / kSummaryCsv);
  emit_chart(summary, config_.out_dir / kChartSvg);
  write_file(config_.out_dir / kTaxonomyJson, tax.dump(2) + "\n");

  out_ << "classified " << summary.total_docs << " records into "
       << summary.rows.size() << " aspect rows\n"
       << summary_csv(summary);
  return summary;
}

void Pipeline::run_all() {
  ingest();
  train();
  evaluate();
  report();
}

}  // namespace edumine
