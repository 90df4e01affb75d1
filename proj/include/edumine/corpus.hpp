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
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edumine/label.hpp"

namespace edumine {

/// One student or teacher comment.
struct FeedbackRecord {
  std::string id;
  std::string source;
  std::string created_at;  // RFC 3339
  std::string text;        // raw text, nonempty after trimming
  std::optional<SentimentLabel> label;

  bool operator==(const FeedbackRecord&) const = default;
};

struct LabeledCorpus {
  std::vector<FeedbackRecord> records;
  std::size_t skipped = 0;
};

/// Receives (1-based line number, reason) for every rejected input line.
using SkipLogger = std::function<void(std::size_t, std::string_view)>;

/// Writes "<path>:<line>: skipped: <reason>" to stderr.
SkipLogger stderr_skip_logger(std::string path);

/// True if `ts` is a syntactically and calendrically valid RFC 3339
/// date-time (e.g. "2017-01-01T00:00:00Z", "2017-01-01T05:30:00.25+05:30").
bool is_rfc3339(std::string_view ts);

/// Parses JSON Lines feedback. Lines that are not JSON objects, miss a
/// required field, carry blank text, a bad timestamp or an unknown label are
/// counted in `skipped` and reported to `log`. Throws IoError if the stream
/// fails and Error on a duplicate id.
LabeledCorpus parse_jsonl(std::istream& in, const SkipLogger& log = {});

/// File variant of parse_jsonl. Throws IoError naming `path` when the file
/// cannot be opened or read.
LabeledCorpus ingest_jsonl(const std::filesystem::path& path,
                           const SkipLogger& log = {});

/// Serializes one record per line with fields in schema order.
void write_jsonl(std::ostream& out, const LabeledCorpus& corpus);
void write_jsonl(const std::filesystem::path& path,
                 const LabeledCorpus& corpus);

/// splitmix64 generator; the shuffle in `split` draws from this.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

/// Fisher-Yates shuffle: for i = n-1 down to 1, swap(i, next() % (i + 1)).
template <typename T>
void shuffle(std::vector<T>& items, std::uint64_t seed) {
  SplitMix64 rng(seed);
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next() % i);
    std::swap(items[i - 1], items[j]);
  }
}

/// Number of training records for `n` records at `fraction`:
/// ceil(n * fraction), with a 1e-9 guard against binary rounding.
std::size_t train_count(std::size_t n, double fraction);

/// Shuffles with `seed` and cuts into (train, test). Requires every record
/// to be labeled, at least two records, and fraction in (0, 1).
std::pair<LabeledCorpus, LabeledCorpus> split(const LabeledCorpus& corpus,
                                              double train_fraction,
                                              std::uint64_t seed);

}  // namespace edumine
