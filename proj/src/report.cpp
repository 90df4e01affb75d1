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

#include "edumine/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include "edumine/error.hpp"

namespace edumine {
namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 400;
constexpr double kLeft = 60.0;
constexpr double kRight = 150.0;  // legend column
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;  // x-axis labels
constexpr double kPlotWidth = kWidth - kLeft - kRight;
constexpr double kPlotHeight = kHeight - kTop - kBottom;

constexpr const char* kLabelColors[] = {"#d62728", "#7f7f7f", "#2ca02c"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  s.erase(s.find_last_not_of('0') + 1);
  if (s.back() == '.') s.pop_back();
  return s == "-0" ? "0" : s;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << body;
  if (!out) throw IoError("write failure on '" + path.string() + "'");
}

// Tick step giving at most 5 intervals up to `max`.
std::uint64_t tick_step(std::uint64_t max) {
  std::uint64_t step = 1;
  while (true) {
    for (std::uint64_t m : {1, 2, 5}) {
      if (max <= step * m * 5) return step * m;
    }
    step *= 10;
  }
}

}  // namespace

std::string utc_now() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

AspectSentimentSummary aggregate(const std::vector<ClassifiedDocument>& docs,
                                 std::string generated_at) {
  AspectSentimentSummary summary;
  summary.generated_at = std::move(generated_at);
  summary.total_docs = docs.size();
  for (const ClassifiedDocument& d : docs) {
    if (d.aspects.empty()) {
      ++summary.rows["uncategorized"][label_index(d.label)];
      continue;
    }
    for (const std::string& aspect : d.aspects) {
      ++summary.rows[aspect][label_index(d.label)];
    }
  }
  return summary;
}

std::string summary_csv(const AspectSentimentSummary& summary) {
  std::ostringstream out;
  out << "aspect,label,count,proportion\n";
  for (const auto& [aspect, counts] : summary.rows) {
    std::uint64_t total = 0;
    for (std::uint64_t c : counts) total += c;
    for (SentimentLabel l : kAllLabels) {
      const std::uint64_t c = counts[label_index(l)];
      const double p =
          total == 0 ? 0.0 : static_cast<double>(c) / static_cast<double>(total);
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", p);
      out << csv_field(aspect) << ',' << to_string(l) << ',' << c << ','
          << buf << '\n';
    }
  }
  return out.str();
}

std::string summary_svg(const AspectSentimentSummary& summary) {
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << kWidth << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth
      << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<title>Sentiment by aspect</title>\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" fill=\"#ffffff\"/>\n";
  svg << "<text x=\"" << num(kWidth / 2.0)
      << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
         "Sentiment by aspect</text>\n";

  std::uint64_t max_count = 0;
  for (const auto& [aspect, counts] : summary.rows) {
    for (std::uint64_t c : counts) max_count = std::max(max_count, c);
  }

  const double x0 = kLeft, y0 = kTop + kPlotHeight;
  // axes
  svg << "<g id=\"axes\" stroke=\"#000000\" stroke-width=\"1\">\n"
      << "<line x1=\"" << num(x0) << "\" y1=\"" << num(kTop) << "\" x2=\""
      << num(x0) << "\" y2=\"" << num(y0) << "\"/>\n"
      << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\""
      << num(x0 + kPlotWidth) << "\" y2=\"" << num(y0) << "\"/>\n"
      << "</g>\n";
  svg << "<text x=\"" << num(x0 + kPlotWidth / 2) << "\" y=\""
      << num(kHeight - 12.0)
      << "\" text-anchor=\"middle\">Aspect</text>\n";
  svg << "<text x=\"16\" y=\"" << num(kTop + kPlotHeight / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << num(kTop + kPlotHeight / 2) << ")\">Documents</text>\n";

  if (max_count == 0) {
    svg << "<text x=\"" << num(x0 + kPlotWidth / 2) << "\" y=\""
        << num(kTop + kPlotHeight / 2)
        << "\" text-anchor=\"middle\" fill=\"#555555\">no data</text>\n";
  } else {
    // y ticks
    const std::uint64_t step = tick_step(max_count);
    const double scale = kPlotHeight / static_cast<double>(max_count);
    svg << "<g id=\"ticks\">\n";
    for (std::uint64_t v = 0; v <= max_count; v += step) {
      const double y = y0 - static_cast<double>(v) * scale;
      svg << "<line x1=\"" << num(x0 - 4) << "\" y1=\"" << num(y)
          << "\" x2=\"" << num(x0) << "\" y2=\"" << num(y)
          << "\" stroke=\"#000000\"/><text x=\"" << num(x0 - 6) << "\" y=\""
          << num(y + 4) << "\" text-anchor=\"end\">" << v << "</text>\n";
    }
    svg << "</g>\n";

    // bars: one group per aspect, one bar per label
    const double group_width =
        kPlotWidth / static_cast<double>(summary.rows.size());
    const double bar_width = group_width * 0.8 / 3.0;
    svg << "<g id=\"bars\">\n";
    std::size_t g = 0;
    for (const auto& [aspect, counts] : summary.rows) {
      const double gx = x0 + group_width * static_cast<double>(g);
      for (SentimentLabel l : kAllLabels) {
        const std::uint64_t c = counts[label_index(l)];
        const double h = static_cast<double>(c) * kPlotHeight /
                         static_cast<double>(max_count);
        const double bx =
            gx + group_width * 0.1 +
            bar_width * static_cast<double>(label_index(l));
        svg << "<rect class=\"bar\" data-aspect=\"" << xml_escape(aspect)
            << "\" data-label=\"" << to_string(l) << "\" data-count=\"" << c
            << "\" x=\"" << num(bx) << "\" y=\"" << num(y0 - h)
            << "\" width=\"" << num(bar_width) << "\" height=\"" << num(h)
            << "\" fill=\"" << kLabelColors[label_index(l)] << "\"/>\n";
      }
      svg << "<text x=\"" << num(gx + group_width / 2) << "\" y=\""
          << num(y0 + 18) << "\" text-anchor=\"middle\">"
          << xml_escape(aspect) << "</text>\n";
      ++g;
    }
    svg << "</g>\n";
  }

  // legend
  svg << "<g id=\"legend\">\n";
  const double lx = kWidth - kRight + 20;
  for (SentimentLabel l : kAllLabels) {
    const double ly = kTop + 20.0 * static_cast<double>(label_index(l));
    svg << "<rect x=\"" << num(lx) << "\" y=\"" << num(ly)
        << "\" width=\"12\" height=\"12\" fill=\""
        << kLabelColors[label_index(l)] << "\"/><text x=\"" << num(lx + 18)
        << "\" y=\"" << num(ly + 10) << "\">" << to_string(l) << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

void emit_csv(const AspectSentimentSummary& summary,
              const std::filesystem::path& path) {
  write_file(path, summary_csv(summary));
}

void emit_chart(const AspectSentimentSummary& summary,
                const std::filesystem::path& path) {
  write_file(path, summary_svg(summary));
}

}  // namespace edumine
