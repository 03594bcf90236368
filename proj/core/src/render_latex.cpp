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
#include <sstream>

#include <fmt/format.h>

#include "evalsense/parser.hpp"
#include "evalsense/render.hpp"
#include "report_content.hpp"

namespace evalsense {
namespace {

using internal::BarChart;
using internal::FormatNumber;

std::string EscapeLatex(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '\\':
        out += "\\textbackslash{}";
        break;
      case '&':
      case '%':
      case '$':
      case '#':
      case '_':
      case '{':
      case '}':
        out.push_back('\\');
        out.push_back(c);
        break;
      case '~':
        out += "\\textasciitilde{}";
        break;
      case '^':
        out += "\\textasciicircum{}";
        break;
      case '<':
        out += "\\textless{}";
        break;
      case '>':
        out += "\\textgreater{}";
        break;
      case '\n':
      case '\r':
      case '\t':
        out.push_back(' ');
        break;
      default:
        out.push_back(c);
    }
  }
  return out;
}

constexpr std::array<std::string_view, 2> kSeriesColors = {"blue!60",
                                                           "red!60"};

void WriteChart(std::ostringstream& out, const BarChart& chart) {
  double y_max = 1.0;
  for (const auto& series : chart.series) {
    for (double v : series.values) y_max = std::max(y_max, v);
  }
  const bool rotate = chart.categories.size() > 6;
  out << "\\begin{figure}[htbp]\n\\centering\n\\begin{tikzpicture}\n"
      << "\\begin{axis}[ybar, bar width=" << (chart.series.size() > 1 ? 5 : 10)
      << "pt, width=0.9\\textwidth, height=6cm, ymin=0, ymax="
      << FormatNumber(y_max * 1.1, 2) << ",\n  xtick=data, xticklabels={";
  for (std::size_t i = 0; i < chart.categories.size(); ++i) {
    if (i > 0) out << ", ";
    out << '{' << EscapeLatex(chart.categories[i]) << '}';
  }
  out << "},\n";
  if (rotate) out << "  x tick label style={rotate=45, anchor=east},\n";
  out << "  xlabel={" << EscapeLatex(chart.x_label) << "}, ylabel={"
      << EscapeLatex(chart.y_label) << "}";
  if (chart.series.size() > 1) out << ", legend pos=north west";
  out << "]\n";
  for (std::size_t s = 0; s < chart.series.size(); ++s) {
    const auto& series = chart.series[s];
    out << "\\addplot[fill=" << kSeriesColors[s % kSeriesColors.size()]
        << "] coordinates {";
    for (std::size_t i = 0; i < series.values.size(); ++i) {
      out << '(' << i << ',' << FormatNumber(series.values[i], 3) << ')';
    }
    out << "};\n";
  }
  if (chart.series.size() > 1) {
    out << "\\legend{";
    for (std::size_t s = 0; s < chart.series.size(); ++s) {
      if (s > 0) out << ", ";
      out << EscapeLatex(chart.series[s].name);
    }
    out << "}\n";
  }
  out << "\\end{axis}\n\\end{tikzpicture}\n\\caption{"
      << EscapeLatex(chart.caption) << "}\n\\label{fig:" << chart.id
      << "}\n\\end{figure}\n\n";
}

void WriteTopic(std::ostringstream& out, const TopicReport& report,
                std::size_t index) {
  out << "\\clearpage\n\\section{Subreport for terms associated with: "
      << EscapeLatex(report.topic.term) << "}\n\n";
  out << "Matching phrases: " << report.count;
  if (report.count > 0) {
    out << ". Average score: " << FormatNumber(report.mean, 2);
  }
  out << ".\n\n";
  if (report.count == 0) {
    out << internal::kEmptyTopicText << "\n\n";
    return;
  }
  WriteChart(out, internal::TopicChart(report, index));
  out << "\\subsection{Table}\n\n"
      << "\\begin{longtable}{p{0.72\\textwidth} c c}\n\\toprule\n"
      << "Phrase & Score & Check \\\\\n\\midrule\n\\endhead\n";
  for (const Exemplar& e : report.exemplars) {
    out << EscapeLatex(e.raw_text) << " & " << e.score << " & "
        << (e.agrees ? "agrees" : "differs") << " \\\\\n";
  }
  out << "\\bottomrule\n\\end{longtable}\n\n";
}

}  // namespace

std::string RenderLatex(const ReportBundle& bundle) {
  std::ostringstream out;
  const ReportMetadata& meta = bundle.metadata;
  out << "\\documentclass[11pt]{article}\n"
      << "\\usepackage[utf8]{inputenc}\n"
      << "\\usepackage[T1]{fontenc}\n"
      << "\\usepackage[margin=1in]{geometry}\n"
      << "\\usepackage{booktabs}\n"
      << "\\usepackage{longtable}\n"
      << "\\usepackage{pgfplots}\n"
      << "\\pgfplotsset{compat=1.16}\n\n"
      << "\\title{" << EscapeLatex(meta.title) << "}\n"
      << "\\date{" << EscapeLatex(meta.date) << "}\n"
      << "\\author{}\n\n"
      << "\\begin{document}\n\\maketitle\n\n";

  out << "\\section{Overview}\n\nThis report covers the following review "
         "files:\n\\begin{itemize}\n";
  for (const std::string& file : meta.source_files) {
    out << "  \\item \\texttt{" << EscapeLatex(file) << "}\n";
  }
  out << "\\end{itemize}\n\n" << EscapeLatex(internal::kOverviewText) << "\n\n";
  out << "\\paragraph{Original review}\n"
      << EscapeLatex(internal::kExampleReview) << "\n\n"
      << "\\paragraph{Parsed phrases}\n\\begin{enumerate}\n";
  for (const std::string& phrase : SplitReview(internal::kExampleReview)) {
    out << "  \\item " << EscapeLatex(phrase) << "\n";
  }
  out << "\\end{enumerate}\n\n";
  out << "Scorer: \\texttt{" << EscapeLatex(meta.scorer_id) << "}";
  if (meta.seed) out << ", seed " << *meta.seed;
  out << ".\n\n\\begin{center}\n";
  for (int s = 1; s <= 5; ++s) {
    if (s > 1) out << " -- ";
    out << s << ": " << internal::kScoreNames[s - 1];
  }
  out << "\n\\end{center}\n\n";

  out << "\\section{Scoring System}\n\n"
      << EscapeLatex(internal::kScoringText) << "\n\n\\begin{description}\n";
  for (int s = 5; s >= 1; --s) {
    out << "  \\item[Score " << s << " (" << internal::kScoreNames[s - 1]
        << ")] " << EscapeLatex(internal::kScoreDescriptions[s - 1]) << "\n";
  }
  out << "\\end{description}\n\n";

  out << "\\section{General Results}\n\n";
  for (const BarChart& chart : internal::GeneralCharts(bundle.general)) {
    if (chart.categories.empty()) continue;
    if (chart.id == "sentiment-vs-rating" && bundle.general.rating_norm.empty()) {
      out << "No overall course ratings were provided; the comparison below "
             "shows sentiment only.\n\n";
    }
    WriteChart(out, chart);
  }

  for (std::size_t i = 0; i < bundle.topics.size(); ++i) {
    WriteTopic(out, bundle.topics[i], i);
  }
  out << "\\end{document}\n";
  return std::move(out).str();
}

}  // namespace evalsense
