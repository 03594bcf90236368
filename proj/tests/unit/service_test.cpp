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

#include <atomic>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "evalsense/errors.hpp"
#include "evalsense/render.hpp"
#include "evalsense/service.hpp"
#include "evalsense/topics.hpp"
#include "fixtures.hpp"

using namespace evalsense;
using nlohmann::json;

namespace {

struct RunningService {
  explicit RunningService(std::shared_ptr<const Snapshot> snapshot)
      : service(std::move(snapshot)) {
    port = service.Bind("127.0.0.1", 0);
    thread = std::thread([this] { service.Run(); });
    for (int i = 0; i < 200 && !service.IsRunning(); ++i) {
      std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
  }
  ~RunningService() {
    service.Stop();
    thread.join();
  }
  ReviewService service;
  int port = 0;
  std::thread thread;
};

}  // namespace

TEST_CASE("query counts equal phrase counts") {
  const auto snap = testing::SampleSnapshot();
  for (const char* term : {"curve", "exam", "office hour", "zzz", "LAB"}) {
    const QueryResult r = Query(*snap, term);
    long total = 0;
    for (long h : r.hist) total += h;
    CHECK(total == static_cast<long>(r.phrases.size()));
  }
  CHECK_THROWS_AS(Query(*snap, "   "), InvalidArgument);
}

TEST_CASE("query equals a direct topic match") {
  const auto snap = testing::SampleSnapshot();
  for (const char* term : {"curve", "office hour", "lab"}) {
    const auto direct = MatchPhrases(TopicSpec::FromQuery(term), snap->scored);
    const QueryResult r = Query(*snap, term);
    REQUIRE(r.phrases.size() == direct.size());
    for (std::size_t i = 0; i < direct.size(); ++i) {
      CHECK(r.phrases[i].raw_text == direct[i].phrase.raw_text);
      CHECK(r.phrases[i].score == direct[i].fine.value());
      CHECK(r.phrases[i].author_id == direct[i].phrase.author_id);
    }
  }
  CHECK_FALSE(Query(*snap, "curve").phrases.empty());
}

TEST_CASE("routing without the network") {
  const auto snap = testing::SampleSnapshot();
  const ReviewService service(snap);
  const auto summary = service.Handle("/api/summary", "", false);
  CHECK(summary.status == 200);
  CHECK(json::parse(summary.body) ==
        json::parse(GeneralStatsJson(snap->bundle.general)));
  const auto topics = service.Handle("/api/topics", "", false);
  CHECK(json::parse(topics.body).size() == 13);
  const auto meta = json::parse(service.Handle("/api/meta", "", false).body);
  CHECK(meta.at("review_count") == 50);
  CHECK(meta.at("topic_count") == 13);
  const auto q = service.Handle("/api/query", "curve", true);
  CHECK(q.status == 200);
  const json body = json::parse(q.body);
  CHECK(body.at("count") == body.at("phrases").size());
  CHECK(service.Handle("/api/query", "", false).status == 400);
  CHECK(service.Handle("/api/query", "  ", true).status == 400);
  const auto missing = service.Handle("/api/nope", "", false);
  CHECK(missing.status == 404);
  CHECK(json::parse(missing.body).contains("error"));
}

TEST_CASE("http endpoints and concurrent identical queries") {
  const auto snap = testing::SampleSnapshot();
  RunningService running(snap);
  REQUIRE(running.port > 0);
  REQUIRE(running.service.IsRunning());

  httplib::Client client("127.0.0.1", running.port);
  const auto summary = client.Get("/api/summary");
  REQUIRE(summary);
  CHECK(summary->status == 200);
  CHECK(summary->get_header_value("Content-Type")
            .starts_with("application/json"));
  const auto bad = client.Get("/api/query");
  REQUIRE(bad);
  CHECK(bad->status == 400);
  const auto unknown = client.Get("/api/other");
  REQUIRE(unknown);
  CHECK(unknown->status == 404);

  constexpr int kClients = 24;
  std::vector<std::string> bodies(kClients);
  std::vector<int> statuses(kClients, 0);
  std::vector<std::thread> threads;
  for (int i = 0; i < kClients; ++i) {
    threads.emplace_back([&, i] {
      httplib::Client c("127.0.0.1", running.port);
      const auto res = c.Get("/api/query?term=office%20hour");
      if (res) {
        statuses[i] = res->status;
        bodies[i] = res->body;
      }
    });
  }
  for (auto& t : threads) t.join();
  const std::set<std::string> distinct(bodies.begin(), bodies.end());
  for (int s : statuses) CHECK(s == 200);
  CHECK(distinct.size() == 1);
  CHECK(*distinct.begin() == QueryResultJson(Query(*snap, "office hour")));
}

TEST_CASE("binding an occupied port fails") {
  const auto snap = testing::SampleSnapshot();
  RunningService first(snap);
  ReviewService second(snap);
  CHECK_THROWS_AS(second.Bind("127.0.0.1", first.port), IoError);
}
