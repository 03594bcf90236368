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

#include <random>
#include <set>
#include <string>
#include <vector>

#include "evalsense/errors.hpp"
#include "evalsense/parser.hpp"
#include "evalsense/sentiment.hpp"
#include "evalsense/topics.hpp"
#include "oracles.hpp"

using namespace evalsense;

namespace {

std::vector<Phrase> Phrases(const std::vector<std::string>& texts) {
  std::vector<Phrase> out;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    Phrase p;
    p.phrase_id = "t#" + std::to_string(i + 2) + "/0";
    p.review_id = "t#" + std::to_string(i + 2);
    p.author_id = "t:s" + std::to_string(i);
    p.raw_text = texts[i];
    p.normalized_text = Normalize(texts[i]);
    out.push_back(p);
  }
  return out;
}

std::vector<ScoredPhrase> Scored(const std::vector<std::string>& texts) {
  const EngineConfig cfg;
  const LexiconScorer scorer(Lexicon::Default(), cfg);
  return ScorePhrases(Phrases(texts), scorer, Lexicon::Default(), cfg);
}

TopicSpec Single(const std::string& word) {
  TopicSpec t;
  t.term = word;
  t.patterns = {{word}};
  return t;
}

}  // namespace

TEST_CASE("word counts") {
  const StopWords stop{"the", "was"};
  const WordCounts wc = CountWords(Phrases({"the ta was great", "great ta"}), stop);
  CHECK(wc == WordCounts{{"ta", 2}, {"great", 2}});
  CHECK(CountWords(Phrases({"the was the"}), stop).empty());
  CHECK(CountWords({}, stop).empty());
}

TEST_CASE("auto topic selection") {
  const WordCounts wc{{"exams", 40}, {"worksheet", 30}, {"curve", 20}};
  const std::vector<TopicSpec> fixed{Single("exam")};
  const auto picked = SelectAutoTopics(wc, fixed, 2);
  REQUIRE(picked.size() == 2);
  CHECK(picked[0].term == "worksheet");
  CHECK(picked[1].term == "curve");
  CHECK(picked[0].kind == TopicKind::kAuto);
  CHECK(SelectAutoTopics(wc, fixed, 0).empty());
  CHECK(kDefaultAutoTopics == 6);
}

TEST_CASE("auto topics skip rare, short and overlapping tokens") {
  const WordCounts wc{{"lab", 5},  {"labs", 4}, {"ok", 9},
                      {"rare", 2}, {"book", 8}, {"notebook", 8},
                      {"zeta", 5}};
  const std::vector<TopicSpec> fixed{Single("textbook"), Single("book")};
  const auto picked = SelectAutoTopics(wc, fixed, 10);
  std::vector<std::string> terms;
  for (const auto& t : picked) terms.push_back(t.term);
  // notebook does not start with book and book does not start with notebook.
  CHECK(terms == std::vector<std::string>{"notebook", "lab", "zeta", "labs"});
}

TEST_CASE("auto topic invariants on random counts") {
  std::mt19937_64 rng(31);
  const std::vector<std::string> vocab{"exam",  "exams", "exampl", "lecture",
                                       "lect",  "tabs",  "tab",    "homework",
                                       "home",  "curve", "quiz",   "quizzes",
                                       "clear", "class", "slides", "slide"};
  const auto& fixed = DefaultFixedTopics();
  std::uniform_int_distribution<long> count(0, 20);
  std::uniform_int_distribution<std::size_t> k(0, 8);
  for (int i = 0; i < 300; ++i) {
    WordCounts wc;
    for (const auto& w : vocab) wc[w] = count(rng);
    const std::size_t want = k(rng);
    const auto picked = SelectAutoTopics(wc, fixed, want);
    CHECK(picked.size() <= want);
    std::set<std::string> seen;
    for (const auto& t : picked) {
      CHECK(seen.insert(t.term).second);
      CHECK(wc.at(t.term) >= kMinAutoTopicCount);
      for (const auto& f : fixed) {
        for (const auto& pattern : f.patterns) {
          for (const auto& word : pattern) {
            CHECK_FALSE(TokenMatches(t.term, word));
            CHECK_FALSE(TokenMatches(word, t.term));
          }
        }
      }
    }
  }
}

TEST_CASE("phrase matching") {
  const auto& fixed = DefaultFixedTopics();
  REQUIRE(fixed.size() == 7);
  const TopicSpec& exam = fixed[3];
  const TopicSpec& office = fixed[6];
  CHECK(exam.term == "Exam");
  CHECK(Matches(exam, "i felt unprepared for questions pertaining to exams."));
  CHECK(Matches(office, "attend his office hours."));
  CHECK_FALSE(Matches(office, "the office was closed. hours later"));
  CHECK(Matches(Single("board"), "boardwalk views"));
  CHECK_FALSE(Matches(Single("board"), "on the whiteboard"));
  CHECK(Matches(fixed[0], "the ta was super helpful."));
  CHECK_FALSE(Matches(fixed[0], "we talked a lot"));
}

TEST_CASE("match phrases agrees with the token-run oracle") {
  const std::vector<std::string> texts = {
      "the exams were hard",        "office hours helped",
      "my office is far",           "hours of homework",
      "the textbook was useless",   "ta sessions rocked",
      "notebooks were required",    "the midterm, then the final",
      "lectures went fast",         "nothing relevant here"};
  const auto scored = Scored(texts);
  for (const TopicSpec& topic : DefaultFixedTopics()) {
    const auto matched = MatchPhrases(topic, scored);
    std::vector<ScoredPhrase> expected;
    for (const auto& s : scored) {
      bool any = false;
      for (const auto& pattern : topic.patterns) {
        any = any || oracle::PrefixRunMatch(s.phrase.normalized_text, pattern);
      }
      if (any) expected.push_back(s);
    }
    INFO(topic.term);
    CHECK(matched == expected);
  }
}

TEST_CASE("query topics") {
  const TopicSpec q = TopicSpec::FromQuery("  Office   Hour ");
  CHECK(q.patterns == std::vector<std::vector<std::string>>{{"office", "hour"}});
  CHECK_THROWS_AS(TopicSpec::FromQuery("  "), InvalidArgument);
}

TEST_CASE("fixed topic and stop word files") {
  const auto topics = ParseFixedTopics(
      "# comment\nInstructor: instructor, ta\nOffice Hours: office hour\nLab\n",
      "t.tsv");
  REQUIRE(topics.size() == 3);
  CHECK(topics[0].patterns ==
        std::vector<std::vector<std::string>>{{"instructor"}, {"ta"}});
  CHECK(topics[1].patterns ==
        std::vector<std::vector<std::string>>{{"office", "hour"}});
  CHECK(topics[2].patterns == std::vector<std::vector<std::string>>{{"lab"}});
  const StopWords sw = ParseStopWords("# c\nThe\n and \n\n");
  CHECK(sw == StopWords{"the", "and"});
  CHECK(DefaultStopWords().contains("the"));
  CHECK(DefaultStopWords().size() > 150);
}
