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

#ifndef EVALSENSE_REPORT_HPP_
#define EVALSENSE_REPORT_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evalsense/ingest.hpp"
#include "evalsense/sentiment.hpp"
#include "evalsense/topics.hpp"

namespace evalsense {

// Author means are binned at half-point resolution: bin i is centered on
// 1 + i/2 and spans +-0.25 around it.
inline constexpr std::size_t kAuthorMeanBins = 9;
inline constexpr std::size_t kDefaultExemplarsPerScore = 4;

struct AuthorMean {
  std::string author_id;
  double mean = 0.0;
  long phrases = 0;
};

struct TopicMean {
  std::string term;
  double mean = 0.0;
  long count = 0;
};

struct GeneralStats {
  std::array<long, kAuthorMeanBins> author_mean_hist{};
  std::array<long, 5> raw_hist{};
  std::vector<TopicMean> topic_means;
  // Authors in order of first scored phrase.
  std::vector<AuthorMean> author_means;
  // (mean - 1) / 4, parallel to author_means.
  std::vector<double> sentiment_norm;
  // rating / 9 over reviews that carry a rating, in dataset order.
  std::vector<double> rating_norm;
};

struct Exemplar {
  std::string phrase_id;
  std::string raw_text;
  int score = 3;
  double compound = 0.0;
  bool agrees = false;
};

struct TopicReport {
  TopicSpec topic;
  std::array<long, 5> hist{};
  long count = 0;
  double mean = 0.0;  // 0 when count == 0
  std::vector<Exemplar> exemplars;
};

struct ReportMetadata {
  std::string title = "Student Evaluations Sentiment Analysis";
  std::vector<std::string> source_files;
  std::string date;  // injected by the caller; never read from the clock here
  std::string scorer_id;
  std::optional<std::uint64_t> seed;
};

struct ReportBundle {
  ReportMetadata metadata;
  GeneralStats general;
  std::vector<TopicReport> topics;  // fixed topics first, then auto
};

// Bin index for an author mean in [1, 5].
std::size_t AuthorMeanBin(long score_sum, long count);

// Throws InvalidArgument when `scored` is empty. topic_means is filled from
// `topics` in the given order.
GeneralStats ComputeGeneralStats(std::span<const ScoredPhrase> scored,
                                 const Dataset& dataset,
                                 std::span<const TopicReport> topics = {});

// Histogram, mean and exemplar table for one topic. For each score from 5
// down to 1, up to `per_score` matching phrases are listed, agreeing phrases
// first and each group in input order. Throws InvalidArgument when
// per_score is 0.
TopicReport BuildTopicReport(const TopicSpec& topic,
                             std::span<const ScoredPhrase> scored,
                             std::size_t per_score);

struct BundleOptions {
  std::vector<TopicSpec> fixed_topics;
  StopWords stopwords;
  std::size_t auto_topics = kDefaultAutoTopics;
  std::size_t exemplars_per_score = kDefaultExemplarsPerScore;
  unsigned threads = 1;
};

// Runs topic discovery, topic reports and general statistics.
ReportBundle BuildBundle(const Dataset& dataset,
                         std::span<const ScoredPhrase> scored,
                         const BundleOptions& options, ReportMetadata metadata);

}  // namespace evalsense

#endif  // EVALSENSE_REPORT_HPP_
