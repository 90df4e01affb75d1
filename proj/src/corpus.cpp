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

#include "edumine/corpus.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <unordered_set>
#include <variant>

#include <json.hpp>

#include "edumine/error.hpp"

namespace edumine {
namespace {

using nlohmann::json;

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Parses exactly `width` digits at `pos`.
std::optional<int> digits(std::string_view s, std::size_t pos,
                          std::size_t width) {
  if (pos + width > s.size()) return std::nullopt;
  int value = 0;
  for (std::size_t i = pos; i < pos + width; ++i) {
    if (!is_digit(s[i])) return std::nullopt;
    value = value * 10 + (s[i] - '0');
  }
  return value;
}

bool is_leap(int year) {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30,
                                  31, 31, 30, 31, 30, 31};
  return month == 2 && is_leap(year) ? 29 : kDays[month - 1];
}

bool is_blank(std::string_view s) {
  for (char c : s) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r' && c != '\f' &&
        c != '\v') {
      return false;
    }
  }
  return true;
}

const std::string* string_field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) return nullptr;
  return it->get_ptr<const std::string*>();
}

// Returns the record or the reason it was rejected.
std::variant<FeedbackRecord, std::string> parse_record(std::string_view line) {
  json obj = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (obj.is_discarded()) return std::string("malformed JSON");
  if (!obj.is_object()) return std::string("line is not a JSON object");

  FeedbackRecord rec;
  for (auto [key, dest] : {std::pair{"id", &rec.id},
                           std::pair{"source", &rec.source},
                           std::pair{"created_at", &rec.created_at},
                           std::pair{"text", &rec.text}}) {
    const std::string* value = string_field(obj, key);
    if (value == nullptr) {
      return std::string("missing or non-string field '") + key + "'";
    }
    *dest = *value;
  }
  if (rec.id.empty()) return std::string("empty id");
  if (is_blank(rec.text)) return std::string("missing text");
  if (!is_rfc3339(rec.created_at)) {
    return "invalid created_at '" + rec.created_at + "'";
  }
  if (auto it = obj.find("label"); it != obj.end() && !it->is_null()) {
    if (!it->is_string()) return std::string("non-string label");
    auto label = parse_label(it->get_ref<const std::string&>());
    if (!label) {
      return "unknown label '" + it->get<std::string>() + "'";
    }
    rec.label = *label;
  }
  return rec;
}

}  // namespace

SkipLogger stderr_skip_logger(std::string path) {
  return [path = std::move(path)](std::size_t line, std::string_view reason) {
    std::cerr << path << ':' << line << ": skipped: " << reason << '\n';
  };
}

bool is_rfc3339(std::string_view ts) {
  // full-date "T" partial-time [frac] (Z | +hh:mm | -hh:mm)
  if (ts.size() < 20) return false;
  auto year = digits(ts, 0, 4), month = digits(ts, 5, 2),
       day = digits(ts, 8, 2), hour = digits(ts, 11, 2),
       minute = digits(ts, 14, 2), second = digits(ts, 17, 2);
  if (!year || !month || !day || !hour || !minute || !second) return false;
  if (ts[4] != '-' || ts[7] != '-' || ts[13] != ':' || ts[16] != ':') {
    return false;
  }
  if (ts[10] != 'T' && ts[10] != 't') return false;
  if (*month < 1 || *month > 12) return false;
  if (*day < 1 || *day > days_in_month(*year, *month)) return false;
  if (*hour > 23 || *minute > 59 || *second > 60) return false;

  std::size_t pos = 19;
  if (ts[pos] == '.') {
    const std::size_t start = ++pos;
    while (pos < ts.size() && is_digit(ts[pos])) ++pos;
    if (pos == start) return false;
  }
  if (pos >= ts.size()) return false;
  if (ts[pos] == 'Z' || ts[pos] == 'z') return pos + 1 == ts.size();
  if (ts[pos] != '+' && ts[pos] != '-') return false;
  if (pos + 6 != ts.size() || ts[pos + 3] != ':') return false;
  auto off_h = digits(ts, pos + 1, 2), off_m = digits(ts, pos + 4, 2);
  return off_h && off_m && *off_h <= 23 && *off_m <= 59;
}

LabeledCorpus parse_jsonl(std::istream& in, const SkipLogger& log) {
  LabeledCorpus corpus;
  std::unordered_set<std::string> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto parsed = parse_record(line);
    if (auto* reason = std::get_if<std::string>(&parsed)) {
      ++corpus.skipped;
      if (log) log(line_no, *reason);
      continue;
    }
    auto& rec = std::get<FeedbackRecord>(parsed);
    if (!ids.insert(rec.id).second) {
      throw Error("duplicate record id '" + rec.id + "' at line " +
                  std::to_string(line_no));
    }
    corpus.records.push_back(std::move(rec));
  }
  if (in.bad()) throw IoError("read failure");
  return corpus;
}

LabeledCorpus ingest_jsonl(const std::filesystem::path& path,
                           const SkipLogger& log) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  try {
    return parse_jsonl(in, log);
  } catch (const IoError&) {
    throw IoError("read failure on '" + path.string() + "'");
  }
}

void write_jsonl(std::ostream& out, const LabeledCorpus& corpus) {
  for (const FeedbackRecord& rec : corpus.records) {
    // ordered_json keeps schema field order in the output.
    nlohmann::ordered_json obj;
    obj["id"] = rec.id;
    obj["source"] = rec.source;
    obj["created_at"] = rec.created_at;
    obj["text"] = rec.text;
    if (rec.label) obj["label"] = std::string(to_string(*rec.label));
    out << obj.dump() << '\n';
  }
}

void write_jsonl(const std::filesystem::path& path,
                 const LabeledCorpus& corpus) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  write_jsonl(out, corpus);
  if (!out) throw IoError("write failure on '" + path.string() + "'");
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::size_t train_count(std::size_t n, double fraction) {
  return static_cast<std::size_t>(
      std::ceil(static_cast<double>(n) * fraction - 1e-9));
}

std::pair<LabeledCorpus, LabeledCorpus> split(const LabeledCorpus& corpus,
                                              double train_fraction,
                                              std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw ConfigError("train fraction must lie in (0, 1), got " +
                      std::to_string(train_fraction));
  }
  if (corpus.records.size() < 2) {
    throw ConfigError("split needs at least 2 records, got " +
                      std::to_string(corpus.records.size()));
  }
  for (const FeedbackRecord& rec : corpus.records) {
    if (!rec.label) throw Error("record '" + rec.id + "' has no label");
  }
  std::vector<FeedbackRecord> shuffled = corpus.records;
  shuffle(shuffled, seed);
  const std::size_t n_train = train_count(shuffled.size(), train_fraction);
  LabeledCorpus train, test;
  train.records.assign(shuffled.begin(), shuffled.begin() + n_train);
  test.records.assign(shuffled.begin() + n_train, shuffled.end());
  return {std::move(train), std::move(test)};
}

}  // namespace edumine
