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

#include "evalsense/topics.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "evalsense/errors.hpp"
#include "evalsense/resources.hpp"
#include "evalsense/text.hpp"

namespace evalsense {
namespace {

// Patterns shorter than this match whole tokens only.
constexpr std::size_t kMinPrefixLength = 3;

std::string_view StripComment(std::string_view line) {
  const std::size_t hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

template <typename Fn>
void ForEachLine(std::string_view content, Fn&& fn) {
  std::size_t line_no = 0;
  while (!content.empty()) {
    const std::size_t nl = content.find('\n');
    const std::string_view line = content.substr(0, nl);
    content.remove_prefix(nl == std::string_view::npos ? content.size()
                                                       : nl + 1);
    fn(++line_no, line);
  }
}

bool Overlaps(std::string_view a, std::string_view b) {
  return TokenMatches(a, b) || TokenMatches(b, a);
}

}  // namespace

std::string_view TopicKindName(TopicKind kind) {
  return kind == TopicKind::kFixed ? "fixed" : "auto";
}

TopicSpec TopicSpec::FromQuery(std::string_view term) {
  const std::string normalized = text::CollapseWhitespace(term);
  std::vector<std::string> tokens = text::LetterTokens(normalized);
  if (tokens.empty()) {
    throw InvalidArgument("query term must contain at least one word");
  }
  TopicSpec spec;
  spec.term = normalized;
  spec.kind = TopicKind::kAuto;
  spec.patterns.push_back(std::move(tokens));
  return spec;
}

StopWords ParseStopWords(std::string_view content) {
  StopWords words;
  ForEachLine(content, [&](std::size_t, std::string_view line) {
    const std::string_view word = text::Trim(StripComment(line));
    if (!word.empty()) words.insert(text::ToLowerAscii(word));
  });
  return words;
}

StopWords LoadStopWords(const std::string& path) {
  return ParseStopWords(text::ReadFile(path));
}

const StopWords& DefaultStopWords() {
  static const StopWords words = ParseStopWords(resources::DefaultStopWords());
  return words;
}

std::vector<TopicSpec> ParseFixedTopics(std::string_view content,
                                        std::string_view source) {
  std::vector<TopicSpec> topics;
  ForEachLine(content, [&](std::size_t line_no, std::string_view line) {
    line = text::Trim(StripComment(line));
    if (line.empty()) return;
    const std::size_t colon = line.find(':');
    TopicSpec topic;
    topic.kind = TopicKind::kFixed;
    topic.term = std::string(text::Trim(line.substr(0, colon)));
    if (topic.term.empty()) {
      throw ValidationError(
          fmt::format("{}: line {}: empty topic name", source, line_no));
    }
    std::string_view synonyms =
        colon == std::string_view::npos ? std::string_view{}
                                        : line.substr(colon + 1);
    while (!synonyms.empty()) {
      const std::size_t comma = synonyms.find(',');
      auto tokens = text::LetterTokens(synonyms.substr(0, comma));
      if (!tokens.empty()) topic.patterns.push_back(std::move(tokens));
      synonyms.remove_prefix(comma == std::string_view::npos ? synonyms.size()
                                                             : comma + 1);
    }
    if (topic.patterns.empty()) {
      auto tokens = text::LetterTokens(topic.term);
      if (tokens.empty()) {
        throw ValidationError(fmt::format(
            "{}: line {}: topic '{}' has no matchable words", source, line_no,
            topic.term));
      }
      topic.patterns.push_back(std::move(tokens));
    }
    topics.push_back(std::move(topic));
  });
  return topics;
}

std::vector<TopicSpec> LoadFixedTopics(const std::string& path) {
  return ParseFixedTopics(text::ReadFile(path), path);
}

const std::vector<TopicSpec>& DefaultFixedTopics() {
  static const std::vector<TopicSpec> topics =
      ParseFixedTopics(resources::DefaultFixedTopics(), "<builtin topics>");
  return topics;
}

bool TokenMatches(std::string_view token, std::string_view pattern) {
  if (pattern.size() < kMinPrefixLength) return token == pattern;
  return token.starts_with(pattern);
}

bool Matches(const TopicSpec& topic, std::span<const std::string> tokens) {
  for (const auto& pattern : topic.patterns) {
    if (pattern.empty() || pattern.size() > tokens.size()) continue;
    for (std::size_t start = 0; start + pattern.size() <= tokens.size();
         ++start) {
      bool all = true;
      for (std::size_t i = 0; all && i < pattern.size(); ++i) {
        all = TokenMatches(tokens[start + i], pattern[i]);
      }
      if (all) return true;
    }
  }
  return false;
}

bool Matches(const TopicSpec& topic, std::string_view normalized_text) {
  const std::vector<std::string> tokens = text::LetterTokens(normalized_text);
  return Matches(topic, tokens);
}

WordCounts CountWords(std::span<const Phrase> phrases,
                      const StopWords& stopwords) {
  WordCounts counts;
  for (const Phrase& phrase : phrases) {
    for (std::string& token : text::LetterTokens(phrase.normalized_text)) {
      if (stopwords.contains(token)) continue;
      ++counts[std::move(token)];
    }
  }
  return counts;
}

std::vector<TopicSpec> SelectAutoTopics(const WordCounts& counts,
                                        std::span<const TopicSpec> fixed,
                                        std::size_t k, long min_count) {
  std::vector<std::pair<long, std::string_view>> ranked;
  for (const auto& [token, count] : counts) {
    if (count < min_count || token.size() < kMinTokenLength) continue;
    bool excluded = false;
    for (const TopicSpec& topic : fixed) {
      for (const auto& pattern : topic.patterns) {
        for (const std::string& word : pattern) {
          excluded = excluded || Overlaps(token, word);
        }
      }
    }
    if (!excluded) ranked.emplace_back(count, token);
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  if (ranked.size() > k) ranked.resize(k);

  std::vector<TopicSpec> topics;
  topics.reserve(ranked.size());
  for (const auto& [count, token] : ranked) {
    TopicSpec topic;
    topic.term = std::string(token);
    topic.kind = TopicKind::kAuto;
    topic.patterns = {{std::string(token)}};
    topics.push_back(std::move(topic));
  }
  return topics;
}

std::vector<ScoredPhrase> MatchPhrases(const TopicSpec& topic,
                                       std::span<const ScoredPhrase> phrases) {
  std::vector<ScoredPhrase> out;
  for (const ScoredPhrase& scored : phrases) {
    if (Matches(topic, scored.phrase.normalized_text)) out.push_back(scored);
  }
  return out;
}

}  // namespace evalsense
