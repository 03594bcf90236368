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

#include "evalsense/parser.hpp"

#include <fmt/format.h>

#include "evalsense/text.hpp"

namespace evalsense {
namespace {

bool IsTerminator(char c) { return c == '.' || c == '!' || c == '?'; }

// Whole-word, case-insensitive "but" starting at `i`.
bool IsButAt(std::string_view s, std::size_t i) {
  if (i + 3 > s.size()) return false;
  if (i > 0 && text::IsWordChar(s[i - 1])) return false;
  if (i + 3 < s.size() && text::IsWordChar(s[i + 3])) return false;
  return (s[i] | 0x20) == 'b' && (s[i + 1] | 0x20) == 'u' &&
         (s[i + 2] | 0x20) == 't';
}

}  // namespace

std::size_t CountWordTokens(std::string_view s) {
  std::size_t count = 0;
  bool in_token = false;
  bool has_word_char = false;
  for (char c : s) {
    if (text::IsAsciiSpace(c)) {
      if (in_token && has_word_char) ++count;
      in_token = has_word_char = false;
    } else {
      in_token = true;
      has_word_char |= text::IsWordChar(c);
    }
  }
  if (in_token && has_word_char) ++count;
  return count;
}

std::vector<std::string> SplitReview(std::string_view text) {
  std::vector<std::string_view> pieces;
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (IsTerminator(text[i])) {
      std::size_t end = i;
      while (end < text.size() && IsTerminator(text[end])) ++end;
      pieces.push_back(text.substr(start, end - start));
      start = i = end;
    } else if (IsButAt(text, i)) {
      std::string_view before = text::Trim(text.substr(start, i - start));
      if (!before.empty() && before.back() == ',') before.remove_suffix(1);
      pieces.push_back(before);
      start = i = i + 3;
    } else {
      ++i;
    }
  }
  if (start < text.size()) pieces.push_back(text.substr(start));

  std::vector<std::string> phrases;
  for (std::string_view piece : pieces) {
    piece = text::Trim(piece);
    if (CountWordTokens(piece) >= 2) phrases.emplace_back(piece);
  }
  return phrases;
}

std::string Normalize(std::string_view raw) {
  return text::CollapseWhitespace(raw);
}

std::vector<Phrase> ParseDataset(const Dataset& dataset) {
  std::vector<Phrase> phrases;
  for (const Review& review : dataset.reviews) {
    std::size_t ordinal = 0;
    for (std::string& raw : SplitReview(review.text)) {
      Phrase phrase;
      phrase.phrase_id = fmt::format("{}/{}", review.review_id, ordinal);
      phrase.review_id = review.review_id;
      phrase.author_id = review.author_id;
      phrase.ordinal = ordinal;
      phrase.normalized_text = Normalize(raw);
      phrase.raw_text = std::move(raw);
      phrases.push_back(std::move(phrase));
      ++ordinal;
    }
  }
  return phrases;
}

}  // namespace evalsense
