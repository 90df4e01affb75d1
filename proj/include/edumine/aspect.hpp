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
#include <utility>
#include <vector>

#include "edumine/preprocess.hpp"

namespace edumine {

enum class PosTag { kNoun, kVerb, kAdjective, kAdverb, kOther };

/// Which rule tier produced a tag.
enum class TagTier { kLexicon, kSuffix, kDefault };

std::string_view to_string(PosTag tag);
std::string_view to_string(TagTier tier);
std::optional<PosTag> parse_pos_tag(std::string_view name);

struct TaggedToken {
  Token token;
  PosTag tag = PosTag::kNoun;
  TagTier tier = TagTier::kDefault;

  bool operator==(const TaggedToken&) const = default;
};

using TagLexicon = std::map<std::string, PosTag, std::less<>>;

/// Lines "word<TAB>tag", tag one of noun/verb/adjective/adverb/other.
TagLexicon parse_tag_lexicon(std::string_view contents);
TagLexicon load_tag_lexicon(const std::filesystem::path& path);
const TagLexicon& default_tag_lexicon();

/// Adds, for each entry whose word stems differently, the stemmed word with
/// the same tag. Existing entries are never overwritten.
TagLexicon with_stemmed_keys(const TagLexicon& lexicon,
                             const LemmaExceptions& exceptions);

/// Keeps tokens whose first code point is a letter.
std::vector<Token> filter_alphabetic(const std::vector<Token>& tokens);

/// Lexicon lookup, then suffix rules, then Noun.
std::vector<TaggedToken> pos_tag(const std::vector<Token>& tokens,
                                 const TagLexicon& lexicon);

struct NounPosting {
  std::set<std::string> documents;
  std::uint64_t occurrences = 0;

  bool operator==(const NounPosting&) const = default;
};

class NounIndex {
 public:
  using Entries = std::map<std::string, NounPosting, std::less<>>;

  void add(std::string_view doc_id, const std::vector<TaggedToken>& tokens);
  /// Count-summing merge; the result is independent of merge order.
  void merge(const NounIndex& other);

  const Entries& entries() const { return entries_; }
  bool contains(std::string_view noun) const;
  bool operator==(const NounIndex&) const = default;

 private:
  Entries entries_;
};

using TaggedDocument = std::pair<std::string, std::vector<TaggedToken>>;

NounIndex index_nouns(const std::vector<TaggedDocument>& docs);

using SeedSets = std::map<std::string, std::set<std::string>>;

/// Seed file: JSON object {category: [noun, ...]}. Throws SchemaError.
SeedSets parse_seeds(std::string_view json_text);
SeedSets load_seeds(const std::filesystem::path& path);

inline constexpr std::string_view kUncategorized = "uncategorized";

struct AspectTaxonomy {
  std::map<std::string, std::set<std::string>, std::less<>> categories;
  std::set<std::string, std::less<>> uncategorized;

  /// Category of `noun`, or nullopt when no category lists it.
  std::optional<std::string_view> category_of(std::string_view noun) const;
};

/// Partitions the indexed nouns by seed membership. Throws ConfigError if
/// two seed sets share a noun.
AspectTaxonomy formulate_taxonomy(const NounIndex& index,
                                  const SeedSets& seeds);

/// Categories touched by the document's nouns. Nouns outside every category
/// contribute "uncategorized".
std::set<std::string> assign_aspects(const std::vector<TaggedToken>& doc,
                                     const AspectTaxonomy& taxonomy);

}  // namespace edumine
