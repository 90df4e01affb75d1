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
#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "edumine/label.hpp"

namespace edumine {

/// Counts indexed by label_index(label).
using LabelCounts = std::array<std::uint64_t, 3>;

struct ClassifiedDocument {
  std::string id;
  SentimentLabel label;
  std::set<std::string> aspects;
};

/// A document with k aspects adds k increments; one with none adds one
/// increment under "uncategorized".
struct AspectSentimentSummary {
  std::map<std::string, LabelCounts> rows;
  std::uint64_t total_docs = 0;
  std::string generated_at;  // RFC 3339, not written to any output file
};

/// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_now();

AspectSentimentSummary aggregate(const std::vector<ClassifiedDocument>& docs,
                                 std::string generated_at = utc_now());

/// "aspect,label,count,proportion", rows sorted by aspect then canonical
/// label order, proportions relative to the aspect's total, 6 decimals.
std::string summary_csv(const AspectSentimentSummary& summary);

/// Grouped bar chart, SVG 1.1 on a fixed 800x400 canvas.
std::string summary_svg(const AspectSentimentSummary& summary);

void emit_csv(const AspectSentimentSummary& summary,
              const std::filesystem::path& path);
void emit_chart(const AspectSentimentSummary& summary,
                const std::filesystem::path& path);

}  // namespace edumine
