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

#include "evalsense/report.hpp"

#include <algorithm>
#include <unordered_map>

#include <fmt/format.h>

#include "evalsense/errors.hpp"
#include "parallel.hpp"

namespace evalsense {

std::size_t AuthorMeanBin(long score_sum, long count) {
  if (count <= 0) throw InvalidArgument("author has no scored phrases");
  // Round (mean - 1) * 2 half-up, in integers: floor((4 sum - 3 n) / (2 n)).
  const long numerator = 4 * score_sum - 3 * count;
  const long index = numerator <= 0 ? 0 : numerator / (2 * count);
  return static_cast<std::size_t>(
      std::clamp<long>(index, 0, static_cast<long>(kAuthorMeanBins) - 1));
}

GeneralStats ComputeGeneralStats(std::span<const ScoredPhrase> scored,
                                 const Dataset& dataset,
                                 std::span<const TopicReport> topics) {
  if (scored.empty()) {
    throw InvalidArgument("general statistics need at least one phrase");
  }
  GeneralStats stats;

  struct Totals {
    long sum = 0;
    long count = 0;
  };
  std::vector<std::string> order;
  std::unordered_map<std::string, Totals> by_author;
  for (const ScoredPhrase& phrase : scored) {
    const int score = phrase.fine.value();
    ++stats.raw_hist[score - 1];
    auto [it, inserted] = by_author.try_emplace(phrase.phrase.author_id);
    if (inserted) order.push_back(phrase.phrase.author_id);
    it->second.sum += score;
    ++it->second.count;
  }

  stats.author_means.reserve(order.size());
  stats.sentiment_norm.reserve(order.size());
  for (const std::string& author : order) {
    const Totals& t = by_author.at(author);
    const double mean =
        static_cast<double>(t.sum) / static_cast<double>(t.count);
    stats.author_means.push_back({author, mean, t.count});
    stats.sentiment_norm.push_back((mean - 1.0) / 4.0);
    ++stats.author_mean_hist[AuthorMeanBin(t.sum, t.count)];
  }

  for (const Review& review : dataset.reviews) {
    if (review.overall_rating) {
      stats.rating_norm.push_back(static_cast<double>(*review.overall_rating) /
                                  9.0);
    }
  }

  for (const TopicReport& report : topics) {
    stats.topic_means.push_back({report.topic.term, report.mean, report.count});
  }
  return stats;
}

TopicReport BuildTopicReport(const TopicSpec& topic,
                             std::span<const ScoredPhrase> scored,
                             std::size_t per_score) {
  if (per_score == 0) {
    throw InvalidArgument("exemplars per score must be at least 1");
  }
  TopicReport report;
  report.topic = topic;
  const std::vector<ScoredPhrase> matches = MatchPhrases(topic, scored);
  long sum = 0;
  for (const ScoredPhrase& match : matches) {
    ++report.hist[match.fine.value() - 1];
    sum += match.fine.value();
  }
  report.count = static_cast<long>(matches.size());
  report.mean = matches.empty() ? 0.0
                                : static_cast<double>(sum) /
                                      static_cast<double>(matches.size());

  for (int score = 5; score >= 1; --score) {
    std::size_t taken = 0;
    for (const bool want_agreeing : {true, false}) {
      for (const ScoredPhrase& match : matches) {
        if (taken == per_score) break;
        if (match.fine.value() != score || match.agrees != want_agreeing) {
          continue;
        }
        report.exemplars.push_back({match.phrase.phrase_id,
                                    match.phrase.raw_text, score,
                                    match.binary.compound, match.agrees});
        ++taken;
      }
    }
  }
  return report;
}

ReportBundle BuildBundle(const Dataset& dataset,
                         std::span<const ScoredPhrase> scored,
                         const BundleOptions& options,
                         ReportMetadata metadata) {
  std::vector<Phrase> phrases;
  phrases.reserve(scored.size());
  for (const ScoredPhrase& s : scored) phrases.push_back(s.phrase);

  std::vector<TopicSpec> topics = options.fixed_topics;
  const WordCounts counts = CountWords(phrases, options.stopwords);
  for (TopicSpec& topic :
       SelectAutoTopics(counts, options.fixed_topics, options.auto_topics)) {
    topics.push_back(std::move(topic));
  }

  ReportBundle bundle;
  bundle.topics.resize(topics.size());
  internal::ParallelChunks(
      topics.size(), options.threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
          bundle.topics[i] = BuildTopicReport(topics[i], scored,
                                              options.exemplars_per_score);
        }
      });
  bundle.general = ComputeGeneralStats(scored, dataset, bundle.topics);
  if (metadata.source_files.empty()) {
    metadata.source_files = dataset.source_files;
  }
  bundle.metadata = std::move(metadata);
  return bundle;
}

}  // namespace evalsense
