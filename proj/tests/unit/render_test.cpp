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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "evalsense/errors.hpp"
#include "evalsense/ingest.hpp"
#include "evalsense/render.hpp"
#include "evalsense/report.hpp"
#include "evalsense/sentiment.hpp"

using namespace evalsense;
using nlohmann::json;

namespace {

std::size_t CountOf(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

ReportBundle SampleBundle() {
  const std::vector<std::filesystem::path> inputs{EVALSENSE_SAMPLE_CORPUS_DIR};
  const Dataset ds = LoadReviews(inputs);
  const EngineConfig cfg;
  const LexiconScorer scorer(Lexicon::Default(), cfg);
  const auto scored =
      ScorePhrases(ParseDataset(ds), scorer, Lexicon::Default(), cfg);
  BundleOptions options;
  options.fixed_topics = DefaultFixedTopics();
  options.stopwords = DefaultStopWords();
  ReportMetadata meta;
  meta.date = "2026-01-01";
  meta.scorer_id = scorer.Id();
  meta.seed = 7;
  return BuildBundle(ds, scored, options, meta);
}

ReportBundle TinyBundle(const std::string& raw) {
  ReportBundle b;
  b.metadata.date = "2026-01-01";
  b.metadata.scorer_id = "constant:3";
  b.metadata.source_files = {"we_&_you.csv"};
  b.general.raw_hist = {0, 0, 1, 0, 0};
  b.general.author_mean_hist[4] = 1;
  TopicReport t;
  t.topic.term = "Costs & 100% {fun}";
  t.topic.patterns = {{"costs"}};
  t.hist = {0, 0, 1, 0, 0};
  t.count = 1;
  t.mean = 3.0;
  t.exemplars.push_back({"x#2/0", raw, 3, 0.0, true});
  b.topics.push_back(t);
  TopicReport empty;
  empty.topic.term = "Nothing";
  empty.topic.patterns = {{"nothing"}};
  b.topics.push_back(empty);
  return b;
}

}  // namespace

TEST_CASE("format names") {
  CHECK(ParseFormat("latex") == Format::kLatex);
  CHECK(ParseFormat("tex") == Format::kLatex);
  CHECK(ParseFormat("html") == Format::kHtml);
  CHECK(ParseFormat("json") == Format::kJson);
  CHECK_THROWS_AS(ParseFormat("pdf"), InvalidArgument);
  CHECK(FormatName(Format::kHtml) == "html");
}

TEST_CASE("latex report structure") {
  const ReportBundle bundle = SampleBundle();
  const std::string tex = RenderLatex(bundle);
  CHECK(tex.starts_with("\\documentclass"));
  CHECK(tex.find("\\end{document}") != std::string::npos);
  CHECK(CountOf(tex, "\\section{Subreport for terms associated with: ") == 13);
  CHECK(tex.find("\\section{Overview}") != std::string::npos);
  CHECK(tex.find("\\section{Scoring System}") != std::string::npos);
  CHECK(tex.find("\\section{General Results}") != std::string::npos);
  CHECK(CountOf(tex, "\\begin{") == CountOf(tex, "\\end{"));
  CHECK(RenderLatex(bundle) == tex);
}

TEST_CASE("latex escapes special characters") {
  const std::string tex = RenderLatex(TinyBundle("paid $5 & got 100% #1_a"));
  CHECK(tex.find("paid \\$5 \\& got 100\\% \\#1\\_a") != std::string::npos);
  CHECK(tex.find("Costs \\& 100\\% \\{fun\\}") != std::string::npos);
  CHECK(tex.find("we\\_\\&\\_you.csv") != std::string::npos);
}

TEST_CASE("html report structure and escaping") {
  const ReportBundle bundle = SampleBundle();
  const std::string html = RenderHtml(bundle);
  CHECK(html.starts_with("<!DOCTYPE html>"));
  CHECK(CountOf(html, "<section class=\"subreport\"") == 13);
  CHECK(html.find("<script") == std::string::npos);
  const std::string tiny = RenderHtml(TinyBundle("<b>bold</b> & \"q\""));
  CHECK(tiny.find("<b>bold</b>") == std::string::npos);
  CHECK(tiny.find("&lt;b&gt;bold&lt;/b&gt; &amp; &quot;q&quot;") !=
        std::string::npos);
}

TEST_CASE("json report mirrors the bundle") {
  const ReportBundle bundle = SampleBundle();
  const json doc = json::parse(RenderJson(bundle));
  CHECK(doc.at("metadata").at("date") == "2026-01-01");
  CHECK(doc.at("metadata").at("seed") == 7);
  REQUIRE(doc.at("topics").size() == 13);
  long raw_total = 0;
  for (long v : doc.at("general").at("raw_hist")) raw_total += v;
  long expected = 0;
  for (long v : bundle.general.raw_hist) expected += v;
  CHECK(raw_total == expected);
  for (std::size_t i = 0; i < bundle.topics.size(); ++i) {
    const auto& t = doc.at("topics")[i];
    CHECK(t.at("term") == bundle.topics[i].topic.term);
    CHECK(t.at("count") == bundle.topics[i].count);
    CHECK(t.at("exemplars").size() == bundle.topics[i].exemplars.size());
  }
  CHECK(json::parse(GeneralStatsJson(bundle.general)) == doc.at("general"));
  CHECK(json::parse(TopicsJson(bundle.topics)) == doc.at("topics"));
  CHECK(json::parse(MetadataJson(bundle.metadata)) == doc.at("metadata"));
}

TEST_CASE("empty topics render a note rather than a table") {
  const ReportBundle tiny = TinyBundle("costs were fine");
  const std::string tex = RenderLatex(tiny);
  CHECK(CountOf(tex, "\\begin{longtable}") == 1);
  const json doc = json::parse(RenderJson(tiny));
  CHECK(doc.at("topics")[1].at("exemplars").empty());
}

TEST_CASE("render to file") {
  const auto dir = std::filesystem::temp_directory_path() / "evalsense_render";
  std::filesystem::remove_all(dir);
  const auto out = dir / "nested" / "report.json";
  const ReportBundle tiny = TinyBundle("costs were fine");
  RenderToFile(tiny, Format::kJson, out);
  std::ifstream in(out, std::ios::binary);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(body.str() == RenderJson(tiny));
  std::filesystem::remove_all(dir);
}
