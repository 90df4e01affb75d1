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

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace edumine {

/// Sentiment class. Enumerator values follow the canonical order
/// negative < neutral < positive, which is used for tie-breaking.
enum class SentimentLabel : int { kNegative = 0, kNeutral = 1, kPositive = 2 };

inline constexpr std::array<SentimentLabel, 3> kAllLabels = {
    SentimentLabel::kNegative, SentimentLabel::kNeutral,
    SentimentLabel::kPositive};

inline constexpr std::size_t label_index(SentimentLabel l) {
  return static_cast<std::size_t>(l);
}

std::string_view to_string(SentimentLabel label);

/// Parses "positive" / "negative" / "neutral" (exact, lowercase).
std::optional<SentimentLabel> parse_label(std::string_view text);

}  // namespace edumine
