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

#include "edumine/preprocess.hpp"

#include <fstream>
#include <sstream>

#include "edumine/error.hpp"
#include "edumine/text.hpp"
#include "embedded_data.hpp"

namespace edumine {
namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failure on '" + path.string() + "'");
  return buf.str();
}

std::string_view trim(std::string_view s) {
  const auto not_space = [](char c) {
    return c != ' ' && c != '\t' && c != '\r' && c != '\n';
  };
  while (!s.empty() && !not_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && !not_space(s.back())) s.remove_suffix(1);
  return s;
}

// Calls fn(line_no, line) for each non-blank, non-comment line.
template <typename Fn>
void for_each_line(std::string_view contents, Fn&& fn) {
  std::size_t line_no = 0;
  while (!contents.empty()) {
    ++line_no;
    const std::size_t nl = contents.find('\n');
    std::string_view line = contents.substr(0, nl);
    contents.remove_prefix(nl == std::string_view::npos ? contents.size()
                                                        : nl + 1);
    if (const std::size_t hash = line.find('#');
        hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (!line.empty()) fn(line_no, line);
  }
}

// Splits "a<TAB>b"; throws SchemaError otherwise.
std::pair<std::string_view, std::string_view> tab_pair(std::size_t line_no,
                                                       std::string_view line) {
  const std::size_t tab = line.find('\t');
  if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos) {
    throw SchemaError("line " + std::to_string(line_no) +
                      ": expected two tab-separated fields");
  }
  return {trim(line.substr(0, tab)), trim(line.substr(tab + 1))};
}

// True if s and t (code points) are at Damerau-Levenshtein (optimal string
// alignment) distance exactly 1.
bool distance_one(std::u32string_view s, std::u32string_view t) {
  if (s.size() == t.size()) {
    std::size_t first = 0;
    while (first < s.size() && s[first] == t[first]) ++first;
    if (first == s.size()) return false;
    // one substitution
    if (s.substr(first + 1) == t.substr(first + 1)) return true;
    // one adjacent transposition
    return first + 1 < s.size() && s[first] == t[first + 1] &&
           s[first + 1] == t[first] && s.substr(first + 2) == t.substr(first + 2);
  }
  if (s.size() + 1 == t.size()) std::swap(s, t);
  if (t.size() + 1 != s.size()) return false;
  // s is one longer: one deletion from s yields t
  std::size_t first = 0;
  while (first < t.size() && s[first] == t[first]) ++first;
  return s.substr(first + 1) == t.substr(first);
}

bool is_lowercase(std::string_view word) { return case_fold(word) == word; }

}  // namespace

// ---------------------------------------------------------------- lexicons

StopwordList::StopwordList(const std::vector<std::string>& words) {
  for (const std::string& w : words) {
    std::string folded = case_fold(trim(w));
    if (!folded.empty()) words_.insert(std::move(folded));
  }
}

bool StopwordList::contains(std::string_view word) const {
  return words_.find(word) != words_.end();
}

StopwordList StopwordList::parse(std::string_view contents) {
  std::vector<std::string> words;
  for_each_line(contents, [&](std::size_t, std::string_view line) {
    words.emplace_back(line);
  });
  return StopwordList(words);
}

StopwordList StopwordList::load(const std::filesystem::path& path) {
  return parse(read_file(path));
}

const StopwordList& StopwordList::english() {
  static const StopwordList list = parse(data::kStopwords);
  return list;
}

SpellLexicon::SpellLexicon(std::map<std::string, std::uint64_t> entries) {
  for (auto& [word, freq] : entries) {
    if (word.empty()) throw ConfigError("spell lexicon: empty word");
    if (!is_lowercase(word)) {
      throw ConfigError("spell lexicon: word '" + word + "' is not lowercase");
    }
    if (freq == 0) {
      throw ConfigError("spell lexicon: word '" + word +
                        "' has frequency 0");
    }
    std::u32string cps = text::decode_utf8(word);
    by_length_[cps.size()].emplace_back(std::move(cps), word);
    entries_.emplace(word, freq);
  }
}

bool SpellLexicon::contains(std::string_view word) const {
  return entries_.find(word) != entries_.end();
}

std::optional<std::string> SpellLexicon::best_neighbour(
    std::string_view word) const {
  const std::u32string cps = text::decode_utf8(word);
  const std::string* best = nullptr;
  std::uint64_t best_freq = 0;
  for (std::size_t len : {cps.size() - 1, cps.size(), cps.size() + 1}) {
    auto bucket = by_length_.find(len);
    if (bucket == by_length_.end()) continue;
    for (const auto& [candidate, spelled] : bucket->second) {
      if (!distance_one(cps, candidate)) continue;
      const std::uint64_t freq = entries_.find(spelled)->second;
      if (best == nullptr || freq > best_freq ||
          (freq == best_freq && spelled < *best)) {
        best = &spelled;
        best_freq = freq;
      }
    }
  }
  if (best == nullptr) return std::nullopt;
  return *best;
}

SpellLexicon SpellLexicon::parse(std::string_view contents) {
  std::map<std::string, std::uint64_t> entries;
  for_each_line(contents, [&](std::size_t line_no, std::string_view line) {
    auto [word, freq_text] = tab_pair(line_no, line);
    std::uint64_t freq = 0;
    try {
      std::size_t used = 0;
      const std::string f(freq_text);
      if (f.empty() || f.front() == '-') throw std::invalid_argument(f);
      freq = std::stoull(f, &used);
      if (used != f.size()) throw std::invalid_argument(f);
    } catch (const std::exception&) {
      throw SchemaError("spell lexicon line " + std::to_string(line_no) +
                        ": bad frequency '" + std::string(freq_text) + "'");
    }
    if (word.empty()) {
      throw SchemaError("spell lexicon line " + std::to_string(line_no) +
                        ": empty word");
    }
    entries[std::string(word)] += freq;
  });
  return SpellLexicon(std::move(entries));
}

SpellLexicon SpellLexicon::load(const std::filesystem::path& path) {
  return parse(read_file(path));
}

LemmaExceptions parse_lemma_exceptions(std::string_view contents) {
  LemmaExceptions out;
  for_each_line(contents, [&](std::size_t line_no, std::string_view line) {
    auto [word, lemma] = tab_pair(line_no, line);
    if (word.empty() || lemma.empty()) {
      throw SchemaError("lemma file line " + std::to_string(line_no) +
                        ": empty field");
    }
    out.insert_or_assign(case_fold(word), case_fold(lemma));
  });
  return out;
}

LemmaExceptions load_lemma_exceptions(const std::filesystem::path& path) {
  return parse_lemma_exceptions(read_file(path));
}

const LemmaExceptions& default_lemma_exceptions() {
  static const LemmaExceptions lemmas = parse_lemma_exceptions(data::kLemmas);
  return lemmas;
}

// ---------------------------------------------------------------- stages

std::string case_fold(std::string_view text) {
  std::u32string cps = text::decode_utf8(text);
  for (char32_t& cp : cps) cp = text::to_lower(cp);
  return text::encode_utf8(cps);
}

std::vector<Token> whitespace_tokens(std::string_view text) {
  std::vector<Token> tokens;
  for (std::string& piece : text::split_whitespace(text)) {
    tokens.push_back(Token{std::move(piece), tokens.size()});
  }
  return tokens;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  for (const std::string& piece : text::split_whitespace(text)) {
    std::u32string cps = text::decode_utf8(piece);
    std::size_t begin = 0, end = cps.size();
    while (begin < end && text::is_punct(cps[begin])) ++begin;
    while (end > begin && text::is_punct(cps[end - 1])) --end;
    if (begin == end) continue;
    tokens.push_back(Token{
        text::encode_utf8(std::u32string_view(cps).substr(begin, end - begin)),
        tokens.size()});
  }
  return tokens;
}

std::vector<Token> remove_stopwords(const std::vector<Token>& tokens,
                                    const StopwordList& stopwords) {
  std::vector<Token> kept;
  kept.reserve(tokens.size());
  for (const Token& t : tokens) {
    if (!stopwords.contains(t.surface)) kept.push_back(t);
  }
  return kept;
}

Token spell_correct(const Token& token, const SpellLexicon& lexicon) {
  if (lexicon.contains(token.surface)) return token;
  if (auto best = lexicon.best_neighbour(token.surface)) {
    return Token{std::move(*best), token.position};
  }
  return token;
}

Token stem(const Token& token, const LemmaExceptions& exceptions) {
  if (auto it = exceptions.find(token.surface); it != exceptions.end()) {
    return Token{it->second, token.position};
  }
  return Token{porter_stem(token.surface), token.position};
}

ProcessedDocument preprocess_text(std::string_view raw,
                                  const PreprocessConfig& config) {
  ProcessedDocument doc;
  const StageToggles& st = config.stages;
  std::string body(raw);
  if (st.case_fold) {
    body = case_fold(body);
    doc.steps_applied.emplace_back(kStageCaseFold);
  }
  if (st.tokenize) {
    doc.tokens = tokenize(body);
    doc.steps_applied.emplace_back(kStageTokenize);
  } else {
    doc.tokens = whitespace_tokens(body);
  }
  if (st.spell_correct) {
    if (config.spell != nullptr) {
      for (Token& t : doc.tokens) t = spell_correct(t, *config.spell);
    }
    doc.steps_applied.emplace_back(kStageSpellCorrect);
  }
  if (st.remove_stopwords) {
    if (config.stopwords != nullptr) {
      doc.tokens = remove_stopwords(doc.tokens, *config.stopwords);
    }
    doc.steps_applied.emplace_back(kStageRemoveStopwords);
  }
  if (st.stem) {
    static const LemmaExceptions kNoExceptions;
    const LemmaExceptions& lemmas =
        config.lemmas != nullptr ? *config.lemmas : kNoExceptions;
    for (Token& t : doc.tokens) t = stem(t, lemmas);
    doc.steps_applied.emplace_back(kStageStem);
  }
  return doc;
}

ProcessedDocument preprocess_document(const FeedbackRecord& record,
                                      const PreprocessConfig& config) {
  ProcessedDocument doc = preprocess_text(record.text, config);
  doc.record_id = record.id;
  return doc;
}

}  // namespace edumine
