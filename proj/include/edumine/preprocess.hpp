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
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "edumine/corpus.hpp"

namespace edumine {

struct Token {
  std::string surface;
  std::size_t position = 0;

  bool operator==(const Token&) const = default;
};

class StopwordList {
 public:
  StopwordList() = default;
  /// Entries are case-folded on insertion; empty entries are dropped.
  explicit StopwordList(const std::vector<std::string>& words);

  bool contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }
  const std::set<std::string, std::less<>>& words() const { return words_; }

  /// Plain-text list: one word per line, '#' starts a comment.
  static StopwordList parse(std::string_view contents);
  static StopwordList load(const std::filesystem::path& path);
  /// The English list bundled with the library.
  static const StopwordList& english();

 private:
  std::set<std::string, std::less<>> words_;
};

/// Dictionary used for spelling correction: word -> corpus frequency.
class SpellLexicon {
 public:
  SpellLexicon() = default;
  /// Throws ConfigError on an empty, non-lowercase or zero-frequency entry.
  explicit SpellLexicon(std::map<std::string, std::uint64_t> entries);

  bool contains(std::string_view word) const;
  bool empty() const { return entries_.empty(); }
  const std::map<std::string, std::uint64_t, std::less<>>& entries() const {
    return entries_;
  }

  /// Best Damerau-Levenshtein distance-1 neighbour of `word`: highest
  /// frequency, then lexicographically smallest. Empty if none.
  std::optional<std::string> best_neighbour(std::string_view word) const;

  /// Lines "word<TAB>frequency"; blank lines and '#' comments ignored.
  static SpellLexicon parse(std::string_view contents);
  static SpellLexicon load(const std::filesystem::path& path);

 private:
  std::map<std::string, std::uint64_t, std::less<>> entries_;
  // Code-point form of every entry, bucketed by length.
  std::unordered_map<std::size_t,
                     std::vector<std::pair<std::u32string, std::string>>>
      by_length_;
};

/// Irregular word -> lemma; consulted before the stemmer.
using LemmaExceptions = std::map<std::string, std::string, std::less<>>;

/// Lines "word<TAB>lemma".
LemmaExceptions parse_lemma_exceptions(std::string_view contents);
LemmaExceptions load_lemma_exceptions(const std::filesystem::path& path);
const LemmaExceptions& default_lemma_exceptions();

/// Canonical stage names, in pipeline order.
inline constexpr std::string_view kStageCaseFold = "case_fold";
inline constexpr std::string_view kStageTokenize = "tokenize";
inline constexpr std::string_view kStageSpellCorrect = "spell_correct";
inline constexpr std::string_view kStageRemoveStopwords = "remove_stopwords";
inline constexpr std::string_view kStageStem = "stem";

struct StageToggles {
  bool case_fold = true;
  bool tokenize = true;
  bool spell_correct = true;
  bool remove_stopwords = true;
  bool stem = true;

  static StageToggles none() { return {false, false, false, false, false}; }
};

/// Lexicons are borrowed and must outlive the config.
struct PreprocessConfig {
  StageToggles stages;
  const StopwordList* stopwords = nullptr;
  const SpellLexicon* spell = nullptr;
  const LemmaExceptions* lemmas = nullptr;
};

struct ProcessedDocument {
  std::string record_id;
  std::vector<Token> tokens;
  std::vector<std::string> steps_applied;

  bool operator==(const ProcessedDocument&) const = default;
};

std::string case_fold(std::string_view text);

/// Whitespace split, then leading/trailing punctuation stripped from each
/// piece. Internal punctuation (apostrophes, hyphens) is kept.
std::vector<Token> tokenize(std::string_view text);

/// Tokens from a plain whitespace split, no punctuation handling.
std::vector<Token> whitespace_tokens(std::string_view text);

std::vector<Token> remove_stopwords(const std::vector<Token>& tokens,
                                    const StopwordList& stopwords);

Token spell_correct(const Token& token, const SpellLexicon& lexicon);

/// Porter suffix stripping on a lowercase ASCII word. Words of length <= 2
/// or containing anything but a-z are returned unchanged.
std::string porter_stem(std::string_view word);

/// Exception lookup, falling back to porter_stem.
Token stem(const Token& token, const LemmaExceptions& exceptions);

/// case_fold -> tokenize -> spell_correct -> remove_stopwords -> stem, each
/// stage skipped when toggled off. A stage whose resource is missing from
/// `config` is still recorded but has no effect.
ProcessedDocument preprocess_document(const FeedbackRecord& record,
                                      const PreprocessConfig& config);

/// Same pipeline on free text (record id left empty).
ProcessedDocument preprocess_text(std::string_view text,
                                  const PreprocessConfig& config);

}  // namespace edumine
