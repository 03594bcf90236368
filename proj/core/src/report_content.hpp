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

#ifndef EVALSENSE_SRC_REPORT_CONTENT_HPP_
#define EVALSENSE_SRC_REPORT_CONTENT_HPP_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "evalsense/report.hpp"

// Chart data and fixed prose shared by the LaTeX and HTML renderers.
namespace evalsense::internal {

struct BarSeries {
  std::string name;
  std::vector<double> values;
};

struct BarChart {
  std::string id;
  std::string caption;
  std::string x_label;
  std::string y_label;
  std::vector<std::string> categories;
  std::vector<BarSeries> series;
};

inline constexpr std::array<std::string_view, 5> kScoreNames = {
    "More Negative", "Negative", "Neutral", "Positive", "More Positive"};

// Indexed by score - 1.
inline constexpr std::array<std::string_view, 5> kScoreDescriptions = {
    "Strongly unfavorable statements: clear complaints or harsh criticism.",
    "Critical or mildly unfavorable statements.",
    "Neutral statements, or remarks whose favorability depends on the reader. "
    "A comment that a course moves quickly is one example.",
    "Favorable statements that approve of an aspect of the course.",
    "Enthusiastic praise.",
};

inline constexpr std::string_view kOverviewText =
    "Each review below was split into short phrases at sentence-ending "
    "punctuation and at the word \"but\". Each phrase was normalized and "
    "given a score from 1 to 5. The phrases and their scores were then "
    "grouped into the general results and the topic sections of this "
    "report. The example shows how one review is split.";

inline constexpr std::string_view kExampleReview =
    "The labs were well organized and fun. The midterm felt rushed, but the "
    "review sessions helped a lot! I would take this class again.";

inline constexpr std::string_view kScoringText =
    "Scores come from an automated model and some phrases will be "
    "misclassified. Treat individual scores as guidance. Aggregates over many "
    "phrases are more reliable than any single row. Each table row also shows "
    "whether an independent positive/neutral/negative check agrees with the "
    "score. When a course receives few negative comments, the rows listed "
    "under scores 1 and 2 are more likely to be scoring errors.";

inline constexpr std::string_view kEmptyTopicText =
    "No matching comments were found for this topic.";

inline constexpr std::size_t kNormBins = 10;

// Histogram of values in [0, 1] over ten equal bins; 1.0 lands in the last.
std::array<long, kNormBins> NormalizedHistogram(
    const std::vector<double>& values);

std::vector<BarChart> GeneralCharts(const GeneralStats& general);
BarChart TopicChart(const TopicReport& report, std::size_t index);

std::string FormatNumber(double value, int decimals);

}  // namespace evalsense::internal

#endif  // EVALSENSE_SRC_REPORT_CONTENT_HPP_
