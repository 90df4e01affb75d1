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

// Reference computations used only by tests. Nothing here calls into the
// classifier or the spell corrector it checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "edumine/label.hpp"

namespace edumine::testing {

using RawDoc = std::pair<std::vector<std::string>, SentimentLabel>;

/// Evaluates Bayes' rule by direct multiplication of probabilities in long
/// double: P(s|M) = P(s) prod_t P(t|s) / sum_s' P(s') prod_t P(t|s'), with
/// P(t|s) = (count + alpha) / (total_s + alpha |V|) and out-of-vocabulary
/// tokens ignored.
inline std::map<SentimentLabel, long double> brute_force_posterior(
    const std::vector<RawDoc>& corpus, double alpha,
    const std::vector<std::string>& query) {
  std::map<SentimentLabel, long double> docs;
  std::map<SentimentLabel, std::map<std::string, long double>> counts;
  std::map<SentimentLabel, long double> totals;
  std::set<std::string> vocab;
  for (const auto& [tokens, label] : corpus) {
    docs[label] += 1;
    for (const std::string& t : tokens) {
      counts[label][t] += 1;
      totals[label] += 1;
      vocab.insert(t);
    }
  }
  const long double n_docs = static_cast<long double>(corpus.size());
  const long double v = static_cast<long double>(vocab.size());
  std::map<SentimentLabel, long double> joint;
  long double evidence = 0;
  for (const auto& [label, n] : docs) {
    long double p = n / n_docs;
    for (const std::string& t : query) {
      if (!vocab.count(t)) continue;
      const long double c = counts[label].count(t) ? counts[label][t] : 0;
      p *= (c + alpha) / (totals[label] + alpha * v);
    }
    joint[label] = p;
    evidence += p;
  }
  for (auto& [label, p] : joint) p /= evidence;
  return joint;
}

/// Every string at Damerau-Levenshtein distance 1 from `word` over
/// `alphabet`: deletions, adjacent transpositions, substitutions, insertions.
inline std::set<std::u32string> distance_one_edits(
    const std::u32string& word, const std::set<char32_t>& alphabet) {
  std::set<std::u32string> out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    out.insert(word.substr(0, i) + word.substr(i + 1));
  }
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    std::u32string w = word;
    std::swap(w[i], w[i + 1]);
    out.insert(w);
  }
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (char32_t c : alphabet) {
      std::u32string w = word;
      w[i] = c;
      out.insert(w);
    }
  }
  for (std::size_t i = 0; i <= word.size(); ++i) {
    for (char32_t c : alphabet) {
      out.insert(word.substr(0, i) + std::u32string(1, c) + word.substr(i));
    }
  }
  out.erase(word);
  return out;
}

/// Random ASCII / Unicode strings for property tests.
class StringGen {
 public:
  explicit StringGen(std::uint64_t seed) : rng_(seed) {}

  std::string ascii(std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<int> ch(32, 126);
    std::string s;
    for (std::size_t n = len(rng_); n > 0; --n) s.push_back(static_cast<char>(ch(rng_)));
    return s;
  }

  /// Mixed-script UTF-8 drawn from a pool of cased and uncased characters.
  std::string unicode(std::size_t max_len) {
    static const std::vector<std::string> kPool = {
        "a", "B", "z", "Q", " ", "\t", ",", "!", "'", "-", "7", "\xC3\x89",
        "\xC3\xA9", "\xC3\x9F", "\xCE\xA3", "\xCF\x83", "\xD0\x96", "\xD0\xB6",
        "\xC4\xB0", "\xE2\x80\x94", "\xE2\x80\x99", "\xE3\x81\x82",
        "\xF0\x9F\x98\x80", "\xE1\xBA\x9E", "\xC7\x85", "\xE2\x84\xAA"};
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, kPool.size() - 1);
    std::string s;
    for (std::size_t n = len(rng_); n > 0; --n) s += kPool[pick(rng_)];
    return s;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Random labeled corpus: up to `max_docs` documents over a vocabulary of
/// `vocab_size` tokens "w0".."w{n-1}".
inline std::vector<RawDoc> random_corpus(std::mt19937_64& rng,
                                         std::size_t max_docs,
                                         std::size_t vocab_size,
                                         std::size_t max_len = 6) {
  std::uniform_int_distribution<std::size_t> n_docs(1, max_docs);
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> tok(0, vocab_size - 1);
  std::uniform_int_distribution<int> lab(0, 2);
  std::vector<RawDoc> corpus;
  for (std::size_t d = n_docs(rng); d > 0; --d) {
    RawDoc doc;
    for (std::size_t n = len(rng); n > 0; --n) {
      doc.first.push_back("w" + std::to_string(tok(rng)));
    }
    doc.second = static_cast<SentimentLabel>(lab(rng));
    corpus.push_back(std::move(doc));
  }
  return corpus;
}

}  // namespace edumine::testing
