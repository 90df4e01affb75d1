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

#include <doctest.h>

#include <random>
#include <regex>

#include "edumine/error.hpp"
#include "edumine/report.hpp"
#include "support/test_util.hpp"

using namespace edumine;

namespace {
constexpr auto kPos = SentimentLabel::kPositive;
constexpr auto kNeg = SentimentLabel::kNegative;
constexpr auto kNeu = SentimentLabel::kNeutral;
const char* kStamp = "2026-01-01T00:00:00Z";

std::uint64_t at(const AspectSentimentSummary& s, const std::string& aspect,
                 SentimentLabel c) {
  return s.rows.at(aspect)[label_index(c)];
}

std::vector<double> bar_heights(const std::string& svg) {
  std::vector<double> out;
  const std::regex bar(R"re(<rect class="bar"[^>]* height="([0-9.]+)")re");
  for (std::sregex_iterator it(svg.begin(), svg.end(), bar), end; it != end; ++it) {
    out.push_back(std::stod((*it)[1]));
  }
  return out;
}
}  // namespace

TEST_CASE("aggregate: counts per aspect and label") {
  const auto s = aggregate({{"d1", kPos, {"examination"}},
                            {"d2", kNeg, {"examination"}},
                            {"d3", kPos, {"examination", "teaching"}},
                            {"d4", kNeu, {}}},
                           kStamp);
  CHECK(s.total_docs == 4);
  CHECK(at(s, "examination", kPos) == 2);
  CHECK(at(s, "examination", kNeg) == 1);
  CHECK(at(s, "teaching", kPos) == 1);
  CHECK(at(s, "uncategorized", kNeu) == 1);
  CHECK(s.generated_at == kStamp);
  CHECK(aggregate({}, kStamp).rows.empty());
}

TEST_CASE("summary_csv") {
  const auto s = aggregate({{"a", kPos, {"examination"}},
                            {"b", kPos, {"examination"}},
                            {"c", kNeg, {"examination"}}},
                           kStamp);
  CHECK(summary_csv(s) ==
        "aspect,label,count,proportion\n"
        "examination,negative,1,0.333333\n"
        "examination,neutral,0,0.000000\n"
        "examination,positive,2,0.666667\n");
  CHECK(summary_csv(aggregate({}, kStamp)) == "aspect,label,count,proportion\n");

  const std::string multi =
      summary_csv(aggregate({{"a", kPos, {"zeta", "alpha", "mid"}}}, kStamp));
  CHECK(multi.find("alpha,") < multi.find("mid,"));
  CHECK(multi.find("mid,") < multi.find("zeta,"));
  CHECK(summary_csv(aggregate({{"a", kPos, {"x,y"}}}, kStamp)).find("\"x,y\",positive") !=
        std::string::npos);
}

TEST_CASE("summary_svg") {
  const std::string empty = summary_svg(aggregate({}, kStamp));
  CHECK(empty.find("no data") != std::string::npos);
  CHECK(bar_heights(empty).empty());

  const auto s = aggregate({{"a", kPos, {"examination"}},
                            {"b", kPos, {"examination"}},
                            {"c", kNeg, {"examination"}}},
                           kStamp);
  const std::string svg = summary_svg(s);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("width=\"800\"") != std::string::npos);
  CHECK(svg.find("height=\"400\"") != std::string::npos);
  CHECK(svg.find("viewBox=\"0 0 800 400\"") != std::string::npos);
  const std::vector<double> h = bar_heights(svg);
  REQUIRE(h.size() == 3);
  // negative, neutral, positive
  CHECK(h[0] > 0.0);
  CHECK(h[2] / h[0] == doctest::Approx(2.0));
  CHECK(h[1] == 0.0);
  CHECK(svg.find(kStamp) == std::string::npos);
  CHECK(summary_svg(aggregate({{"a", kPos, {"examination"}},
                               {"b", kPos, {"examination"}},
                               {"c", kNeg, {"examination"}}},
                              "2030-05-05T00:00:00Z")) == svg);
  CHECK(summary_svg(aggregate({{"a", kPos, {"a<b&c"}}}, kStamp)).find("a&lt;b&amp;c") !=
        std::string::npos);
}

TEST_CASE("emit writes files and reports unwritable paths") {
  const auto dir = testing::temp_dir("report");
  const auto s = aggregate({{"a", kPos, {"examination"}}}, kStamp);
  emit_csv(s, dir / "s.csv");
  emit_chart(s, dir / "c.svg");
  CHECK(testing::read_text(dir / "s.csv") == summary_csv(s));
  CHECK(testing::read_text(dir / "c.svg") == summary_svg(s));
  CHECK_THROWS_AS(emit_csv(s, dir / "missing" / "s.csv"), IoError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("property: total increments equal the sum of aspect multiplicities") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ClassifiedDocument> docs;
    std::uint64_t expected = 0;
    for (int d = rng() % 15; d > 0; --d) {
      ClassifiedDocument doc{"d" + std::to_string(d), static_cast<SentimentLabel>(rng() % 3), {}};
      for (int k = rng() % 4; k > 0; --k) doc.aspects.insert("a" + std::to_string(rng() % 5));
      expected += std::max<std::size_t>(1, doc.aspects.size());
      docs.push_back(doc);
    }
    const auto s = aggregate(docs, kStamp);
    std::uint64_t total = 0;
    for (const auto& [aspect, counts] : s.rows) {
      for (std::uint64_t n : counts) total += n;
    }
    CHECK(total == expected);
    CHECK(s.total_docs == docs.size());
    std::size_t lines = 0;
    for (char ch : summary_csv(s)) lines += ch == '\n';
    CHECK(lines == 1 + 3 * s.rows.size());
  }
}
