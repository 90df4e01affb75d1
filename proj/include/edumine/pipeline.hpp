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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edumine/aspect.hpp"
#include "edumine/classifier.hpp"
#include "edumine/corpus.hpp"
#include "edumine/eval.hpp"
#include "edumine/preprocess.hpp"
#include "edumine/report.hpp"

namespace edumine {

/// Declarative run configuration. Relative paths in a config file resolve
/// against the file's directory. Unset lexicon paths fall back to the
/// bundled defaults; an unset spell lexicon disables correction.
struct PipelineConfig {
  std::optional<std::filesystem::path> corpus;
  std::optional<std::filesystem::path> stopwords;
  std::optional<std::filesystem::path> spell_lexicon;
  std::optional<std::filesystem::path> lemmas;
  std::optional<std::filesystem::path> tag_lexicon;
  std::optional<std::filesystem::path> taxonomy;
  std::optional<std::filesystem::path> model;  // default <out_dir>/model.json
  std::filesystem::path out_dir = "out";
  StageToggles stages;
  double alpha = 1.0;
  double split_fraction = 0.8;
  std::uint64_t seed = 42;

  std::filesystem::path model_path() const;
  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// Parses the JSON config. Throws SchemaError / ConfigError naming the key.
PipelineConfig parse_config(std::string_view json_text,
                            const std::filesystem::path& base_dir);
PipelineConfig load_config(const std::filesystem::path& path);

/// Lexicons and seeds loaded once per run.
struct Resources {
  StopwordList stopwords;
  SpellLexicon spell;
  LemmaExceptions lemmas;
  TagLexicon tags;
  SeedSets seeds;

  static Resources load(const PipelineConfig& config);
  PreprocessConfig preprocess_config(const StageToggles& stages) const;
};

/// Output file names inside out_dir.
inline constexpr std::string_view kMetricsCsv = "metrics.csv";
inline constexpr std::string_view kMetricsTxt = "metrics.txt";
inline constexpr std::string_view kSummaryCsv = "aspect_summary.csv";
inline constexpr std::string_view kChartSvg = "aspect_chart.svg";
inline constexpr std::string_view kTaxonomyJson = "taxonomy.json";

/// Stateful façade over the pipeline phases. Each command writes its
/// human-readable output to `out` and warnings to `err`; errors throw.
class Pipeline {
 public:
  Pipeline(PipelineConfig config, std::ostream& out, std::ostream& err);

  LabeledCorpus ingest();
  NaiveBayesModel train();
  void classify_text(std::string_view text);
  void classify_jsonl(const std::filesystem::path& path);
  Metrics evaluate();
  AspectSentimentSummary report();
  void run_all();

  const PipelineConfig& config() const { return config_; }

 private:
  const Resources& resources();
  std::vector<TrainingExample> preprocess_labeled(const LabeledCorpus& c);
  const LabeledCorpus& corpus();
  SkipLogger skip_logger(const std::filesystem::path& path);

  PipelineConfig config_;
  std::ostream& out_;
  std::ostream& err_;
  std::optional<Resources> resources_;
  std::optional<LabeledCorpus> corpus_;
};

/// Entry point of the `edumine` binary; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace edumine
