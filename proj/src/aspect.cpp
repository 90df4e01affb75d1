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

#include "edumine/aspect.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "edumine/error.hpp"
#include "edumine/text.hpp"
#include "embedded_data.hpp"

namespace edumine {
namespace {

struct SuffixRule {
  std::string_view suffix;
  PosTag tag;
};

constexpr SuffixRule kSuffixRules[] = {
    {"tion", PosTag::kNoun},      {"ment", PosTag::kNoun},
    {"ness", PosTag::kNoun},      {"ity", PosTag::kNoun},
    {"ize", PosTag::kVerb},       {"ate", PosTag::kVerb},
    {"ous", PosTag::kAdjective},  {"ful", PosTag::kAdjective},
    {"able", PosTag::kAdjective}, {"ly", PosTag::kAdverb},
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::string_view to_string(PosTag tag) {
  switch (tag) {
    case PosTag::kNoun: return "noun";
    case PosTag::kVerb: return "verb";
    case PosTag::kAdjective: return "adjective";
    case PosTag::kAdverb: return "adverb";
    case PosTag::kOther: return "other";
  }
  return "other";
}

std::string_view to_string(TagTier tier) {
  switch (tier) {
    case TagTier::kLexicon: return "lexicon";
    case TagTier::kSuffix: return "suffix";
    case TagTier::kDefault: return "default";
  }
  return "default";
}

std::optional<PosTag> parse_pos_tag(std::string_view name) {
  const std::string folded = case_fold(name);
  for (PosTag t : {PosTag::kNoun, PosTag::kVerb, PosTag::kAdjective,
                   PosTag::kAdverb, PosTag::kOther}) {
    if (to_string(t) == folded) return t;
  }
  return std::nullopt;
}

TagLexicon parse_tag_lexicon(std::string_view contents) {
  TagLexicon lexicon;
  std::size_t line_no = 0;
  std::istringstream in{std::string(contents)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw SchemaError("tag lexicon line " + std::to_string(line_no) +
                        ": expected word<TAB>tag");
    }
    const std::string word = case_fold(line.substr(0, tab));
    const std::string tag_name = line.substr(tab + 1);
    auto tag = parse_pos_tag(tag_name);
    if (word.empty() || !tag) {
      throw SchemaError("tag lexicon line " + std::to_string(line_no) +
                        ": bad entry '" + line + "'");
    }
    lexicon.insert_or_assign(word, *tag);
  }
  return lexicon;
}

TagLexicon load_tag_lexicon(const std::filesystem::path& path) {
  return parse_tag_lexicon(read_file(path));
}

const TagLexicon& default_tag_lexicon() {
  static const TagLexicon lexicon = parse_tag_lexicon(data::kTagLexicon);
  return lexicon;
}

TagLexicon with_stemmed_keys(const TagLexicon& lexicon,
                             const LemmaExceptions& exceptions) {
  TagLexicon out = lexicon;
  for (const auto& [word, tag] : lexicon) {
    out.emplace(stem(Token{word, 0}, exceptions).surface, tag);
  }
  return out;
}

std::vector<Token> filter_alphabetic(const std::vector<Token>& tokens) {
  std::vector<Token> kept;
  for (const Token& t : tokens) {
    const std::u32string cps = text::decode_utf8(t.surface);
    if (!cps.empty() && text::is_letter(cps.front())) kept.push_back(t);
  }
  return kept;
}

std::vector<TaggedToken> pos_tag(const std::vector<Token>& tokens,
                                 const TagLexicon& lexicon) {
  std::vector<TaggedToken> tagged;
  tagged.reserve(tokens.size());
  for (const Token& t : tokens) {
    if (auto it = lexicon.find(t.surface); it != lexicon.end()) {
      tagged.push_back({t, it->second, TagTier::kLexicon});
      continue;
    }
    const std::string_view word = t.surface;
    bool matched = false;
    for (const SuffixRule& rule : kSuffixRules) {
      // the suffix alone (e.g. "ate") is not a match
      if (word.size() > rule.suffix.size() && word.ends_with(rule.suffix)) {
        tagged.push_back({t, rule.tag, TagTier::kSuffix});
        matched = true;
        break;
      }
    }
    if (!matched) tagged.push_back({t, PosTag::kNoun, TagTier::kDefault});
  }
  return tagged;
}

void NounIndex::add(std::string_view doc_id,
                    const std::vector<TaggedToken>& tokens) {
  for (const TaggedToken& t : tokens) {
    if (t.tag != PosTag::kNoun) continue;
    auto it = entries_.find(t.token.surface);
    if (it == entries_.end()) {
      it = entries_.emplace(t.token.surface, NounPosting{}).first;
    }
    it->second.documents.emplace(doc_id);
    ++it->second.occurrences;
  }
}

void NounIndex::merge(const NounIndex& other) {
  for (const auto& [noun, posting] : other.entries_) {
    NounPosting& mine = entries_[noun];
    mine.documents.insert(posting.documents.begin(), posting.documents.end());
    mine.occurrences += posting.occurrences;
  }
}

bool NounIndex::contains(std::string_view noun) const {
  return entries_.find(noun) != entries_.end();
}

NounIndex index_nouns(const std::vector<TaggedDocument>& docs) {
  NounIndex index;
  for (const auto& [id, tokens] : docs) index.add(id, tokens);
  return index;
}

SeedSets parse_seeds(std::string_view json_text) {
  using nlohmann::json;
  json doc = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw SchemaError("seed file must be a JSON object {category: [nouns]}");
  }
  SeedSets seeds;
  for (const auto& [category, nouns] : doc.items()) {
    if (category.empty()) throw SchemaError("seed file: empty category name");
    if (!nouns.is_array()) {
      throw SchemaError("seed category '" + category +
                        "' must map to an array of strings");
    }
    std::set<std::string>& set = seeds[category];
    for (const json& noun : nouns) {
      if (!noun.is_string() || noun.get_ref<const std::string&>().empty()) {
        throw SchemaError("seed category '" + category +
                          "' contains a non-string or empty entry");
      }
      set.insert(case_fold(noun.get<std::string>()));
    }
  }
  return seeds;
}

SeedSets load_seeds(const std::filesystem::path& path) {
  try {
    return parse_seeds(read_file(path));
  } catch (const SchemaError& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

std::optional<std::string_view> AspectTaxonomy::category_of(
    std::string_view noun) const {
  for (const auto& [name, nouns] : categories) {
    if (nouns.find(std::string(noun)) != nouns.end()) return name;
  }
  return std::nullopt;
}

AspectTaxonomy formulate_taxonomy(const NounIndex& index,
                                  const SeedSets& seeds) {
  std::map<std::string, std::string, std::less<>> owner;
  for (const auto& [category, nouns] : seeds) {
    if (category == kUncategorized) {
      throw ConfigError("seed category name '" + category + "' is reserved");
    }
    for (const std::string& noun : nouns) {
      auto [it, inserted] = owner.emplace(noun, category);
      if (!inserted) {
        throw ConfigError("seed noun '" + noun + "' appears in both '" +
                          it->second + "' and '" + category + "'");
      }
    }
  }
  AspectTaxonomy taxonomy;
  for (const auto& [category, nouns] : seeds) taxonomy.categories[category];
  for (const auto& [noun, posting] : index.entries()) {
    if (auto it = owner.find(noun); it != owner.end()) {
      taxonomy.categories[it->second].insert(noun);
    } else {
      taxonomy.uncategorized.insert(noun);
    }
  }
  return taxonomy;
}

std::set<std::string> assign_aspects(const std::vector<TaggedToken>& doc,
                                     const AspectTaxonomy& taxonomy) {
  std::set<std::string> aspects;
  for (const TaggedToken& t : doc) {
    if (t.tag != PosTag::kNoun) continue;
    if (auto category = taxonomy.category_of(t.token.surface)) {
      aspects.emplace(*category);
    } else {
      aspects.emplace(kUncategorized);
    }
  }
  return aspects;
}

}  // namespace edumine
