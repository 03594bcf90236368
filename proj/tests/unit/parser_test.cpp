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


#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "evalsense/ingest.hpp"
#include "evalsense/parser.hpp"
#include "evalsense/text.hpp"
#include "oracles.hpp"

using namespace evalsense;

namespace {

const char* const kWorkedReview =
    "The professor was very knowledgable. I thought she/he was very capable, "
    "but often they did not provide enough direction. Overall, though, I "
    "enjoyed the class!";

std::vector<std::string> Lower(std::vector<std::string> v) {
  for (auto& s : v) s = text::ToLowerAscii(s);
  return v;
}

std::map<std::string, int> NonButWords(const std::string& s) {
  std::map<std::string, int> words;
  for (const auto& t : text::LetterTokens(text::ToLowerAscii(s))) {
    if (t != "but") ++words[t];
  }
  return words;
}

std::string RandomReview(std::mt19937_64& rng) {
  static const std::vector<std::string> kPieces = {
      "the", "class", "was", "great", "but", "boring", ".", "!", "?", ",",
      "button", "butter", "BUT", "labs", "...", "exam", "really", "hard"};
  std::uniform_int_distribution<std::size_t> pick(0, kPieces.size() - 1);
  std::uniform_int_distribution<int> len(0, 25);
  std::string out;
  for (int i = len(rng); i > 0; --i) {
    const std::string& p = kPieces[pick(rng)];
    if (!out.empty() && std::isalpha(static_cast<unsigned char>(p[0]))) {
      out += ' ';
    }
    out += p;
  }
  return out;
}

}  // namespace

TEST_CASE("worked review splits into four phrases") {
  const std::vector<std::string> expected = {
      "The professor was very knowledgable.",
      "I thought she/he was very capable",
      "Often they did not provide enough direction.",
      "Overall, though, I enjoyed the class!"};
  CHECK(Lower(SplitReview(kWorkedReview)) == Lower(expected));
}

TEST_CASE("split edge cases") {
  CHECK(SplitReview("").empty());
  CHECK(SplitReview("the button was great but the straps broke.") ==
        std::vector<std::string>{"the button was great", "the straps broke."});
  CHECK(SplitReview("Wow... that was fun! Really?") ==
        std::vector<std::string>{"that was fun!"});
  CHECK(SplitReview("Good class. OK.") ==
        std::vector<std::string>{"Good class."});
  CHECK(SplitReview("It was fine, however slow.") ==
        std::vector<std::string>{"It was fine, however slow."});
}

TEST_CASE("split agrees with the boundary-scan oracle") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const std::string review = RandomReview(rng);
    std::vector<std::string> expected;
    for (auto& piece : oracle::SplitOnButAndPunct(review)) {
      if (CountWordTokens(piece) >= 2) expected.push_back(piece);
    }
    INFO(review);
    CHECK(SplitReview(review) == expected);
  }
}

TEST_CASE("split properties on random reviews") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const std::string review = RandomReview(rng);
    const auto phrases = SplitReview(review);
    INFO(review);
    std::map<std::string, int> kept;
    for (const auto& p : phrases) {
      CHECK(CountWordTokens(p) >= 2);
      for (const auto& t : text::LetterTokens(text::ToLowerAscii(p))) {
        CHECK(t != "but");
      }
      CHECK(SplitReview(p) == std::vector<std::string>{p});
      for (auto& [w, c] : NonButWords(p)) kept[w] += c;
    }
    // Every kept word came from the review, never more often.
    const auto all = NonButWords(review);
    for (const auto& [w, c] : kept) {
      auto it = all.find(w);
      REQUIRE(it != all.end());
      CHECK(c <= it->second);
    }
  }
}

TEST_CASE("normalize") {
  CHECK(Normalize("The TA was  SUPER helpful.") == "the ta was super helpful.");
  CHECK(Normalize("ok") == "ok");
  CHECK(Normalize("A  B\tC") == "a b c");
  const std::string once = Normalize("  Mixed\n\nCase  Text ");
  CHECK(Normalize(once) == once);
}

TEST_CASE("parse dataset assigns ids and ordinals") {
  const Dataset ds = LoadReviewsFromString(
      "author_id,comment,overall_rating\n"
      "s1,\"One is here. Two is here. Three is here.\",5\n"
      "s2,,\n"
      "s3,\"" +
          std::string(kWorkedReview) + "\",7\n",
      "c.csv");
  const auto phrases = ParseDataset(ds);
  REQUIRE(phrases.size() == 7);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(phrases[i].ordinal == i);
    CHECK(phrases[i].review_id == ds.reviews[0].review_id);
    CHECK(phrases[i].phrase_id ==
          ds.reviews[0].review_id + "/" + std::to_string(i));
  }
  CHECK(phrases[3].author_id == ds.reviews[2].author_id);
  for (const auto& p : phrases) {
    CHECK(p.normalized_text == Normalize(p.raw_text));
    CHECK_FALSE(text::Trim(p.raw_text).empty());
  }
  CHECK(ParseDataset(ds) == phrases);
}
