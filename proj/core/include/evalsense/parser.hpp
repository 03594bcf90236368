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

#ifndef EVALSENSE_PARSER_HPP_
#define EVALSENSE_PARSER_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "evalsense/ingest.hpp"

namespace evalsense {

struct Phrase {
  std::string phrase_id;  // "<review_id>/<ordinal>"
  std::string review_id;
  std::string author_id;
  std::size_t ordinal = 0;
  std::string raw_text;
  std::string normalized_text;

  bool operator==(const Phrase&) const = default;
};

// Splits review text into phrases.
//
// A boundary follows every run of '.', '!' or '?' (the run stays on the
// preceding phrase) and replaces every whole-word "but", case-insensitive;
// a comma directly before "but" is dropped along with it. Pieces are trimmed
// and any piece with fewer than two word tokens is discarded.
std::vector<std::string> SplitReview(std::string_view text);

// Lowercases ASCII, collapses whitespace runs and trims. Punctuation is kept.
std::string Normalize(std::string_view raw);

// Number of whitespace-separated tokens holding at least one letter or digit.
std::size_t CountWordTokens(std::string_view s);

// Splits and normalizes every review, in dataset order.
std::vector<Phrase> ParseDataset(const Dataset& dataset);

}  // namespace evalsense

#endif  // EVALSENSE_PARSER_HPP_
