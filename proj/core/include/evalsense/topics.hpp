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

#ifndef EVALSENSE_TOPICS_HPP_
#define EVALSENSE_TOPICS_HPP_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "evalsense/parser.hpp"
#include "evalsense/sentiment.hpp"

namespace evalsense {

enum class TopicKind { kFixed, kAuto };

std::string_view TopicKindName(TopicKind kind);

// A report topic. `patterns` holds one token sequence per synonym; a phrase
// matches when any of them matches. Auto topics have a single one-token
// pattern.
struct TopicSpec {
  std::string term;
  TopicKind kind = TopicKind::kFixed;
  std::vector<std::vector<std::string>> patterns;

  // Builds a transient query topic: whitespace-separated words form one
  // multi-token pattern. Throws InvalidArgument on a blank term.
  static TopicSpec FromQuery(std::string_view term);

  bool operator==(const TopicSpec&) const = default;
};

using StopWords = std::unordered_set<std::string>;

// One token per line, '#' starts a comment.
StopWords ParseStopWords(std::string_view content);
StopWords LoadStopWords(const std::string& path);
const StopWords& DefaultStopWords();

// `Display term: synonym, synonym, ...` per line; a line without synonyms
// uses the lowercased display term. '#' starts a comment. Throws
// ValidationError on an empty display term.
std::vector<TopicSpec> ParseFixedTopics(std::string_view content,
                                        std::string_view source);
std::vector<TopicSpec> LoadFixedTopics(const std::string& path);
const std::vector<TopicSpec>& DefaultFixedTopics();

// Prefix rule: `token` starts with `pattern`. Patterns shorter than three
// characters ("ta") must match exactly.
bool TokenMatches(std::string_view token, std::string_view pattern);

// True when some contiguous run of `tokens` matches some pattern of `topic`.
bool Matches(const TopicSpec& topic, std::span<const std::string> tokens);
bool Matches(const TopicSpec& topic, std::string_view normalized_text);

using WordCounts = std::map<std::string, long>;

inline constexpr std::size_t kMinTokenLength = 3;
inline constexpr long kMinAutoTopicCount = 3;
inline constexpr std::size_t kDefaultAutoTopics = 6;

// Counts letter tokens that are not stop words.
WordCounts CountWords(std::span<const Phrase> phrases,
                      const StopWords& stopwords);

// Top `k` tokens by count (ties lexicographic) with at least `min_count`
// occurrences and kMinTokenLength characters, skipping any token that prefix-overlaps a fixed topic token in
// either direction.
std::vector<TopicSpec> SelectAutoTopics(const WordCounts& counts,
                                        std::span<const TopicSpec> fixed,
                                        std::size_t k,
                                        long min_count = kMinAutoTopicCount);

// Matching phrases in input order.
std::vector<ScoredPhrase> MatchPhrases(const TopicSpec& topic,
                                       std::span<const ScoredPhrase> phrases);

}  // namespace evalsense

#endif  // EVALSENSE_TOPICS_HPP_
