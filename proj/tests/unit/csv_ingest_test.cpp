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
#include <set>
#include <string>
#include <vector>

#include <unistd.h>

#include "evalsense/csv.hpp"
#include "evalsense/errors.hpp"
#include "evalsense/ingest.hpp"

namespace fs = std::filesystem;
using namespace evalsense;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("evalsense_ingest_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path Write(const std::string& name, const std::string& body) const {
    const fs::path p = path / name;
    std::ofstream(p, std::ios::binary) << body;
    return p;
  }
};

}  // namespace

TEST_CASE("csv parses quotes, CRLF, BOM and blank lines") {
  const auto records = csv::Parse(
      "\xEF\xBB\xBF" "a,b\r\n\r\n\"x, \"\"y\"\"\",\"multi\nline\"\r\n", "t.csv");
  REQUIRE(records.size() == 2);
  CHECK(records[0].number == 1);
  CHECK(records[0].fields == std::vector<std::string>{"a", "b"});
  CHECK(records[1].fields ==
        std::vector<std::string>{"x, \"y\"", "multi\nline"});
}

TEST_CASE("csv rejects an unterminated quote") {
  CHECK_THROWS_AS(csv::Parse("a,\"open\n", "bad.csv"), FormatError);
}

TEST_CASE("csv escape round-trips") {
  const std::string field = "he said \"hi\", then\nleft";
  const auto records = csv::Parse(csv::Escape(field) + "," + csv::Escape("x"),
                                  "rt.csv");
  REQUIRE(records.size() == 1);
  CHECK(records[0].fields == std::vector<std::string>{field, "x"});
}

TEST_CASE("two rows, second without rating") {
  const Dataset ds = LoadReviewsFromString(
      "author_id,comment,overall_rating\ns1,\"Great class!\",9\ns2,\"Too "
      "fast.\",\n",
      "f.csv");
  REQUIRE(ds.reviews.size() == 2);
  CHECK(ds.reviews[0].text == "Great class!");
  CHECK(ds.reviews[0].overall_rating == 9);
  CHECK_FALSE(ds.reviews[1].overall_rating.has_value());
  CHECK(ds.reviews[0].review_id != ds.reviews[1].review_id);
}

TEST_CASE("header only gives an empty dataset") {
  const Dataset ds =
      LoadReviewsFromString("author_id,comment,overall_rating\n", "e.csv");
  CHECK(ds.reviews.empty());
}

TEST_CASE("bad header and out-of-range ratings are rejected") {
  CHECK_THROWS_AS(LoadReviewsFromString("id,text\n", "h.csv"), FormatError);
  CHECK_THROWS_AS(
      LoadReviewsFromString("author_id,comment,overall_rating\ns1,x,10\n",
                            "r.csv"),
      ValidationError);
  CHECK_THROWS_AS(
      LoadReviewsFromString("author_id,comment,overall_rating\ns1,x,seven\n",
                            "r.csv"),
      ValidationError);
  CHECK_THROWS_AS(
      LoadReviewsFromString("author_id,comment,overall_rating\n,x,1\n",
                            "r.csv"),
      ValidationError);
}

TEST_CASE("error messages carry the file and row") {
  try {
    LoadReviewsFromString("author_id,comment,overall_rating\ns1,a,1\ns2,b,12\n",
                          "rows.csv");
    FAIL("expected an error");
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    CHECK(what.find("rows.csv") != std::string::npos);
    CHECK(what.find('3') != std::string::npos);
  }
}

TEST_CASE("same author id in two files gives two authors") {
  TempDir dir;
  const std::string header = "author_id,comment,overall_rating\n";
  const fs::path a = dir.Write("a.csv", header + "s1,Good class overall.,7\n");
  const fs::path b = dir.Write("b.csv", header + "s1,Bad class overall.,2\n");
  const std::vector<fs::path> paths{a, b};
  const Dataset ds = LoadReviews(paths);
  // Oracle: distinct (file, raw author) pairs.
  std::set<std::pair<std::string, std::string>> pairs{{"a.csv", "s1"},
                                                      {"b.csv", "s1"}};
  std::set<std::string> authors;
  for (const Review& r : ds.reviews) authors.insert(r.author_id);
  CHECK(authors.size() == pairs.size());
  CHECK(ds.source_files == std::vector<std::string>{"a.csv", "b.csv"});
}

TEST_CASE("loading is deterministic and directories expand sorted") {
  TempDir dir;
  const std::string header = "author_id,comment,overall_rating\n";
  dir.Write("z.csv", header + "s1,Last one here.,5\n");
  dir.Write("m.csv", header + "s2,Middle one here.,5\n");
  dir.Write("notes.txt", "ignored");
  const std::vector<fs::path> inputs{dir.path};
  const auto expanded = ExpandInputs(inputs);
  REQUIRE(expanded.size() == 2);
  CHECK(expanded[0].filename() == "m.csv");
  CHECK(LoadReviews(inputs) == LoadReviews(inputs));
}

TEST_CASE("missing files raise IoError") {
  const std::vector<fs::path> paths{"/nonexistent/evalsense.csv"};
  CHECK_THROWS_AS(LoadReviews(paths), IoError);
}

TEST_CASE("the sample corpus loads") {
  const std::vector<fs::path> inputs{EVALSENSE_SAMPLE_CORPUS_DIR};
  const Dataset ds = LoadReviews(inputs);
  CHECK(ds.reviews.size() == 50);
  CHECK(ds.source_files.size() == 2);
  std::set<std::string> ids;
  for (const Review& r : ds.reviews) ids.insert(r.review_id);
  CHECK(ids.size() == ds.reviews.size());
}
