// Copyright 2026 The evalsense Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <sstream>

#include <fmt/format.h>

#include "evalsense/parser.hpp"
#include "evalsense/render.hpp"
#include "report_content.hpp"

namespace evalsense {
namespace {

using internal::BarChart;
using internal::FormatNumber;

std::string EscapeHtml(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\'':
        out += "&#39;";
        break;
      default:
        out.push_back(c);
    }
  }
  return out;
}

constexpr std::array<std::string_view, 2> kSeriesColors = {"#4e79a7",
                                                           "#e15759"};
constexpr int kWidth = 640;
constexpr int kHeight = 300;
constexpr int kLeft = 56;
constexpr int kRight = 16;
constexpr int kTop = 16;
constexpr int kBottom = 72;

void WriteSvg(std::ostringstream& out, const BarChart& chart) {
  double y_max = 0.0;
  for (const auto& series : chart.series) {
    for (double v : series.values) y_max = std::max(y_max, v);
  }
  y_max = y_max <= 0.0 ? 1.0 : y_max * 1.1;
  const int plot_w = kWidth - kLeft - kRight;
  const int plot_h = kHeight - kTop - kBottom;
  const std::size_t n = std::max<std::size_t>(chart.categories.size(), 1);
  const double slot = static_cast<double>(plot_w) / static_cast<double>(n);
  const double group = slot * 0.8;
  const double bar =
      group / static_cast<double>(std::max<std::size_t>(chart.series.size(), 1));

  out << "<figure id=\"" << chart.id << "\">\n<svg xmlns=\"http://www.w3.org/2000/svg\" "
      << "viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" role=\"img\" "
      << "aria-label=\"" << EscapeHtml(chart.caption) << "\">\n";
  const int base_y = kTop + plot_h;
  out << "<line class=\"axis\" x1=\"" << kLeft << "\" y1=\"" << base_y
      << "\" x2=\"" << kLeft + plot_w << "\" y2=\"" << base_y << "\"/>\n";
  out << "<line class=\"axis\" x1=\"" << kLeft << "\" y1=\"" << kTop
      << "\" x2=\"" << kLeft << "\" y2=\"" << base_y << "\"/>\n";
  for (int tick = 0; tick <= 4; ++tick) {
    const double value = y_max * tick / 4.0;
    const double y = base_y - plot_h * tick / 4.0;
    out << "<text class=\"tick\" x=\"" << kLeft - 6 << "\" y=\""
        << FormatNumber(y + 4, 1) << "\" text-anchor=\"end\">"
        << FormatNumber(value, value < 10 ? 1 : 0) << "</text>\n";
  }
  for (std::size_t s = 0; s < chart.series.size(); ++s) {
    const auto& series = chart.series[s];
    for (std::size_t i = 0; i < series.values.size(); ++i) {
      const double h = plot_h * series.values[i] / y_max;
      const double x = kLeft + slot * i + (slot - group) / 2 + bar * s;
      out << "<rect x=\"" << FormatNumber(x, 2) << "\" y=\""
          << FormatNumber(base_y - h, 2) << "\" width=\""
          << FormatNumber(bar, 2) << "\" height=\"" << FormatNumber(h, 2)
          << "\" fill=\"" << kSeriesColors[s % kSeriesColors.size()]
          << "\"><title>" << EscapeHtml(series.name) << " "
          << EscapeHtml(chart.categories[i]) << ": "
          << FormatNumber(series.values[i], 3) << "</title></rect>\n";
    }
  }
  for (std::size_t i = 0; i < chart.categories.size(); ++i) {
    const double x = kLeft + slot * i + slot / 2;
    out << "<text class=\"tick\" x=\"" << FormatNumber(x, 2) << "\" y=\""
        << base_y + 16 << "\" text-anchor=\"end\" transform=\"rotate(-30 "
        << FormatNumber(x, 2) << ' ' << base_y + 16 << ")\">"
        << EscapeHtml(chart.categories[i]) << "</text>\n";
  }
  out << "<text class=\"label\" x=\"" << kLeft + plot_w / 2 << "\" y=\""
      << kHeight - 6 << "\" text-anchor=\"middle\">"
      << EscapeHtml(chart.x_label) << "</text>\n";
  if (chart.series.size() > 1) {
    for (std::size_t s = 0; s < chart.series.size(); ++s) {
      const int y = kTop + 12 + static_cast<int>(s) * 16;
      out << "<rect x=\"" << kLeft + 12 << "\" y=\"" << y - 9
          << "\" width=\"10\" height=\"10\" fill=\""
          << kSeriesColors[s % kSeriesColors.size()] << "\"/><text class=\"tick\" x=\""
          << kLeft + 28 << "\" y=\"" << y << "\">"
          << EscapeHtml(chart.series[s].name) << "</text>\n";
    }
  }
  out << "</svg>\n<figcaption>" << EscapeHtml(chart.caption)
      << "</figcaption>\n</figure>\n";
}

constexpr std::string_view kStyle = R"(body{font-family:Georgia,serif;max-width:52rem;margin:2rem auto;padding:0 1rem;color:#222}
h1{font-size:1.8rem}h2{border-bottom:1px solid #ccc;padding-bottom:.2rem;margin-top:2.5rem}
figure{margin:1.5rem 0}figcaption{font-size:.9rem;color:#555}
svg{width:100%;height:auto}.axis{stroke:#333;stroke-width:1}
.tick{font-size:11px;font-family:sans-serif;fill:#333}.label{font-size:12px;font-family:sans-serif;fill:#333}
table{border-collapse:collapse;width:100%}th,td{border-bottom:1px solid #ddd;padding:.35rem .5rem;text-align:left;vertical-align:top}
td.num{text-align:center}.legend{text-align:center;font-family:sans-serif}
.note{color:#555;font-style:italic}
)";

}  // namespace

std::string RenderHtml(const ReportBundle& bundle) {
  std::ostringstream out;
  const ReportMetadata& meta = bundle.metadata;
  out << "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n"
      << "<title>" << EscapeHtml(meta.title) << "</title>\n<style>\n"
      << kStyle << "</style>\n</head>\n<body>\n";
  out << "<h1>" << EscapeHtml(meta.title) << "</h1>\n<p>"
      << EscapeHtml(meta.date) << "</p>\n";

  out << "<section id=\"overview\">\n<h2>1 Overview</h2>\n"
      << "<p>This report covers the following review files:</p>\n<ul>\n";
  for (const std::string& file : meta.source_files) {
    out << "<li><code>" << EscapeHtml(file) << "</code></li>\n";
  }
  out << "</ul>\n<p>" << EscapeHtml(internal::kOverviewText) << "</p>\n"
      << "<h3>Original review</h3>\n<p>"
      << EscapeHtml(internal::kExampleReview)
      << "</p>\n<h3>Parsed phrases</h3>\n<ol>\n";
  for (const std::string& phrase : SplitReview(internal::kExampleReview)) {
    out << "<li>" << EscapeHtml(phrase) << "</li>\n";
  }
  out << "</ol>\n<p>Scorer: <code>" << EscapeHtml(meta.scorer_id) << "</code>";
  if (meta.seed) out << ", seed " << *meta.seed;
  out << ".</p>\n<p class=\"legend\">";
  for (int s = 1; s <= 5; ++s) {
    if (s > 1) out << " &ndash; ";
    out << s << ": " << internal::kScoreNames[s - 1];
  }
  out << "</p>\n</section>\n";

  out << "<section id=\"scoring\">\n<h2>2 Scoring System</h2>\n<p>"
      << EscapeHtml(internal::kScoringText) << "</p>\n<dl>\n";
  for (int s = 5; s >= 1; --s) {
    out << "<dt>Score " << s << " (" << internal::kScoreNames[s - 1]
        << ")</dt><dd>" << EscapeHtml(internal::kScoreDescriptions[s - 1])
        << "</dd>\n";
  }
  out << "</dl>\n</section>\n";

  out << "<section id=\"general\">\n<h2>3 General Results</h2>\n";
  for (const BarChart& chart : internal::GeneralCharts(bundle.general)) {
    if (chart.categories.empty()) continue;
    if (chart.id == "sentiment-vs-rating" && bundle.general.rating_norm.empty()) {
      out << "<p class=\"note\">No overall course ratings were provided; the "
             "comparison shows sentiment only.</p>\n";
    }
    WriteSvg(out, chart);
  }
  out << "</section>\n";

  for (std::size_t i = 0; i < bundle.topics.size(); ++i) {
    const TopicReport& report = bundle.topics[i];
    out << "<section class=\"subreport\" id=\"topic-" << i << "\">\n<h2>"
        << i + 4 << " Subreport for terms associated with: "
        << EscapeHtml(report.topic.term) << "</h2>\n<p>Matching phrases: "
        << report.count;
    if (report.count > 0) out << ". Average score: " << FormatNumber(report.mean, 2);
    out << ".</p>\n";
    if (report.count == 0) {
      out << "<p class=\"note\">" << internal::kEmptyTopicText
          << "</p>\n</section>\n";
      continue;
    }
    WriteSvg(out, internal::TopicChart(report, i));
    out << "<table>\n<thead><tr><th>Phrase</th><th>Score</th><th>Check</th>"
           "</tr></thead>\n<tbody>\n";
    for (const Exemplar& e : report.exemplars) {
      out << "<tr><td>" << EscapeHtml(e.raw_text) << "</td><td class=\"num\">"
          << e.score << "</td><td class=\"num\">"
          << (e.agrees ? "agrees" : "differs") << "</td></tr>\n";
    }
    out << "</tbody>\n</table>\n</section>\n";
  }
  out << "</body>\n</html>\n";
  return std::move(out).str();
}

}  // namespace evalsense
