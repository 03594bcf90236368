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

#include "report_content.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace evalsense::internal {

std::array<long, kNormBins> NormalizedHistogram(
    const std::vector<double>& values) {
  std::array<long, kNormBins> hist{};
  for (double v : values) {
    const double clamped = std::clamp(v, 0.0, 1.0);
    const auto bin = std::min<std::size_t>(
        kNormBins - 1,
        static_cast<std::size_t>(std::floor(clamped * kNormBins)));
    ++hist[bin];
  }
  return hist;
}

std::string FormatNumber(double value, int decimals) {
  std::string out = fmt::format("{:.{}f}", value, decimals);
  if (out.starts_with("-") &&
      out.find_first_not_of("-0.") == std::string::npos) {
    out.erase(0, 1);
  }
  return out;
}

std::vector<BarChart> GeneralCharts(const GeneralStats& general) {
  std::vector<BarChart> charts;

  BarChart authors;
  authors.id = "author-means";
  authors.caption =
      "Distribution of per-student average phrase scores, binned at "
      "half-point steps.";
  authors.x_label = "Average score per student";
  authors.y_label = "Students";
  BarSeries author_counts{"Students", {}};
  for (std::size_t i = 0; i < kAuthorMeanBins; ++i) {
    authors.categories.push_back(FormatNumber(1.0 + 0.5 * i, 1));
    author_counts.values.push_back(
        static_cast<double>(general.author_mean_hist[i]));
  }
  authors.series.push_back(std::move(author_counts));
  charts.push_back(std::move(authors));

  BarChart raw;
  raw.id = "raw-scores";
  raw.caption =
      "Score counts over every phrase in the corpus.";
  raw.x_label = "Score";
  raw.y_label = "Phrases";
  BarSeries raw_counts{"Phrases", {}};
  for (int s = 1; s <= 5; ++s) {
    raw.categories.push_back(std::to_string(s));
    raw_counts.values.push_back(static_cast<double>(general.raw_hist[s - 1]));
  }
  raw.series.push_back(std::move(raw_counts));
  charts.push_back(std::move(raw));

  BarChart topics;
  topics.id = "topic-means";
  topics.caption =
      "Average score of phrases that mention each topic. Fixed topics come "
      "first, then the automatically selected ones.";
  topics.x_label = "Topic";
  topics.y_label = "Average score";
  BarSeries topic_means{"Average score", {}};
  for (const TopicMean& t : general.topic_means) {
    topics.categories.push_back(t.term);
    topic_means.values.push_back(t.mean);
  }
  topics.series.push_back(std::move(topic_means));
  charts.push_back(std::move(topics));

  BarChart compare;
  compare.id = "sentiment-vs-rating";
  compare.caption =
      "Per-student average sentiment against the overall course rating each "
      "student gave. Both are rescaled to 0-1: sentiment as (mean - 1) / 4, "
      "ratings as rating / 9.";
  compare.x_label = "Rescaled value";
  compare.y_label = "Students";
  const auto sentiment = NormalizedHistogram(general.sentiment_norm);
  const auto ratings = NormalizedHistogram(general.rating_norm);
  BarSeries s_series{"Sentiment", {}};
  BarSeries r_series{"Rating", {}};
  for (std::size_t i = 0; i < kNormBins; ++i) {
    compare.categories.push_back(
        FormatNumber(static_cast<double>(i) / kNormBins, 1));
    s_series.values.push_back(static_cast<double>(sentiment[i]));
    r_series.values.push_back(static_cast<double>(ratings[i]));
  }
  compare.series.push_back(std::move(s_series));
  if (!general.rating_norm.empty()) compare.series.push_back(std::move(r_series));
  charts.push_back(std::move(compare));
  return charts;
}

BarChart TopicChart(const TopicReport& report, std::size_t index) {
  BarChart chart;
  chart.id = fmt::format("topic-{}", index);
  chart.caption = fmt::format("Scores of the {} phrases mentioning \"{}\".",
                              report.count, report.topic.term);
  chart.x_label = "Score";
  chart.y_label = "Phrases";
  BarSeries counts{"Phrases", {}};
  for (int s = 1; s <= 5; ++s) {
    chart.categories.push_back(std::to_string(s));
    counts.values.push_back(static_cast<double>(report.hist[s - 1]));
  }
  chart.series.push_back(std::move(counts));
  return chart;
}

}  // namespace evalsense::internal
