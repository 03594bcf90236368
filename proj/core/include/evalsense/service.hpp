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

#ifndef EVALSENSE_SERVICE_HPP_
#define EVALSENSE_SERVICE_HPP_

#include <array>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "evalsense/ingest.hpp"
#include "evalsense/report.hpp"
#include "evalsense/sentiment.hpp"

namespace evalsense {

// Immutable, fully scored dataset shared by every request handler.
struct Snapshot {
  Dataset dataset;
  std::vector<ScoredPhrase> scored;
  ReportBundle bundle;
};

struct QueryPhrase {
  std::string raw_text;
  int score = 3;
  double compound = 0.0;
  bool agrees = false;
  std::string author_id;
};

struct QueryResult {
  std::string term;
  std::array<long, 5> hist{};
  double mean = 0.0;
  std::vector<QueryPhrase> phrases;  // every match, never a sample
};

// Lowercases and trims `term`, then matches it like a topic. Zero matches
// give an empty result. Throws InvalidArgument on a blank term.
QueryResult Query(const Snapshot& snapshot, std::string_view term);

std::string QueryResultJson(const QueryResult& result);

// Read-only HTTP/1.1 JSON API:
//
//   GET /api/summary        general statistics
//   GET /api/topics         topic reports
//   GET /api/query?term=... all phrases matching a term
//   GET /api/meta           report metadata
//
// Errors are {"error": "..."} with a 4xx/5xx status. CORS is open.
class ReviewService {
 public:
  explicit ReviewService(std::shared_ptr<const Snapshot> snapshot);
  ~ReviewService();

  ReviewService(const ReviewService&) = delete;
  ReviewService& operator=(const ReviewService&) = delete;

  // Binds `host:port`; port 0 picks a free port. Returns the bound port.
  // Throws IoError when binding fails.
  int Bind(const std::string& host, int port);

  // Blocks serving requests until Stop(). Requires a prior Bind.
  void Run();

  // Stops accepting connections; in-flight requests complete. Safe to call
  // from another thread.
  void Stop();

  bool IsRunning() const;

  // Routes a request without the network; used by the HTTP layer and tests.
  struct Response {
    int status = 200;
    std::string body;
  };
  Response Handle(std::string_view path, std::string_view query_term,
                  bool has_term) const;

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace evalsense

#endif  // EVALSENSE_SERVICE_HPP_
