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

#include "evalsense/service.hpp"

#include <atomic>

#include <fmt/format.h>
#include <httplib.h>
#include <json.hpp>

#include "evalsense/errors.hpp"
#include "evalsense/render.hpp"
#include "evalsense/text.hpp"
#include "evalsense/topics.hpp"
#include "json_codec.hpp"

namespace evalsense {
namespace {

using Json = nlohmann::ordered_json;

std::string ErrorBody(std::string_view message) {
  return Json{{"error", message}}.dump();
}

}  // namespace

QueryResult Query(const Snapshot& snapshot, std::string_view term) {
  const std::string_view trimmed = text::Trim(term);
  if (trimmed.empty()) throw InvalidArgument("term must be non-empty");
  const TopicSpec topic = TopicSpec::FromQuery(trimmed);

  QueryResult result;
  result.term = topic.term;
  long sum = 0;
  for (const ScoredPhrase& match : MatchPhrases(topic, snapshot.scored)) {
    const int score = match.fine.value();
    ++result.hist[score - 1];
    sum += score;
    result.phrases.push_back({match.phrase.raw_text, score,
                              match.binary.compound, match.agrees,
                              match.phrase.author_id});
  }
  if (!result.phrases.empty()) {
    result.mean =
        static_cast<double>(sum) / static_cast<double>(result.phrases.size());
  }
  return result;
}

std::string QueryResultJson(const QueryResult& result) {
  Json j;
  j["term"] = result.term;
  j["hist"] = result.hist;
  j["count"] = result.phrases.size();
  j["mean"] = result.mean;
  Json phrases = Json::array();
  for (const QueryPhrase& p : result.phrases) {
    phrases.push_back({{"raw", p.raw_text},
                       {"score", p.score},
                       {"compound", p.compound},
                       {"agrees", p.agrees},
                       {"author_id", p.author_id}});
  }
  j["phrases"] = phrases;
  return j.dump();
}

class ReviewService::Impl {
 public:
  explicit Impl(std::shared_ptr<const Snapshot> snapshot)
      : snapshot_(std::move(snapshot)) {
    if (!snapshot_) throw InvalidArgument("service needs a snapshot");
    const ReportBundle& bundle = snapshot_->bundle;
    summary_ = GeneralStatsJson(bundle.general);
    topics_ = TopicsJson(bundle.topics);
    Json meta = internal::ToJson(bundle.metadata);
    meta["review_count"] = snapshot_->dataset.reviews.size();
    meta["phrase_count"] = snapshot_->scored.size();
    meta["topic_count"] = bundle.topics.size();
    meta_ = meta.dump();
    InstallRoutes();
  }

  Response Handle(std::string_view path, std::string_view term,
                  bool has_term) const {
    if (path == "/api/summary") return {200, summary_};
    if (path == "/api/topics") return {200, topics_};
    if (path == "/api/meta") return {200, meta_};
    if (path == "/api/query") {
      if (!has_term || text::Trim(term).empty()) {
        return {400, ErrorBody("query parameter 'term' must be non-empty")};
      }
      try {
        return {200, QueryResultJson(Query(*snapshot_, term))};
      } catch (const InvalidArgument& e) {
        return {400, ErrorBody(e.what())};
      }
    }
    return {404, ErrorBody(fmt::format("no such endpoint: {}", path))};
  }

  int Bind(const std::string& host, int port) {
    int bound = port;
    if (port == 0) {
      bound = server_.bind_to_any_port(host);
      if (bound < 0) bound = 0;
    } else if (!server_.bind_to_port(host, port)) {
      bound = 0;
    }
    if (bound <= 0) {
      throw IoError(fmt::format("cannot bind {}:{}", host, port));
    }
    bound_ = true;
    return bound;
  }

  void Run() {
    if (!bound_) throw IoError("service must be bound before Run()");
    server_.listen_after_bind();
  }

  void Stop() { server_.stop(); }
  bool IsRunning() const { return server_.is_running(); }

 private:
  void InstallRoutes() {
    // httplib also sets SO_REUSEPORT, which would let two services share a
    // port without error.
    server_.set_socket_options([](socket_t sock) {
      int yes = 1;
      setsockopt(sock, SOL_SOCKET, SO_REUSEADDR,
                 reinterpret_cast<const void*>(&yes), sizeof(yes));
    });
    server_.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                 {"Access-Control-Allow-Methods", "GET, OPTIONS"},
                                 {"Access-Control-Allow-Headers", "Content-Type"}});
    auto handler = [this](const httplib::Request& req, httplib::Response& res) {
      const bool has_term = req.has_param("term");
      const std::string term = has_term ? req.get_param_value("term") : "";
      const Response r = Handle(req.path, term, has_term);
      res.status = r.status;
      res.set_content(r.body, "application/json; charset=utf-8");
    };
    for (const char* path :
         {"/api/summary", "/api/topics", "/api/query", "/api/meta"}) {
      server_.Get(path, handler);
    }
    server_.Options(".*", [](const httplib::Request&, httplib::Response& res) {
      res.status = 204;
    });
    server_.set_error_handler(
        [](const httplib::Request& req, httplib::Response& res) {
          if (!res.body.empty()) return;
          const std::string message =
              res.status == 404 ? "no such endpoint: " + req.path
                                : fmt::format("HTTP status {}", res.status);
          res.set_content(ErrorBody(message), "application/json; charset=utf-8");
        });
    server_.set_exception_handler([](const httplib::Request&,
                                     httplib::Response& res,
                                     std::exception_ptr ep) {
      std::string message = "internal error";
      try {
        if (ep) std::rethrow_exception(ep);
      } catch (const std::exception& e) {
        message = e.what();
      } catch (...) {
      }
      res.status = 500;
      res.set_content(ErrorBody(message), "application/json; charset=utf-8");
    });
  }

  std::shared_ptr<const Snapshot> snapshot_;
  std::string summary_;
  std::string topics_;
  std::string meta_;
  httplib::Server server_;
  bool bound_ = false;
};

ReviewService::ReviewService(std::shared_ptr<const Snapshot> snapshot)
    : impl_(std::make_unique<Impl>(std::move(snapshot))) {}

ReviewService::~ReviewService() = default;

int ReviewService::Bind(const std::string& host, int port) {
  return impl_->Bind(host, port);
}

void ReviewService::Run() { impl_->Run(); }

void ReviewService::Stop() { impl_->Stop(); }

bool ReviewService::IsRunning() const { return impl_->IsRunning(); }

ReviewService::Response ReviewService::Handle(std::string_view path,
                                              std::string_view query_term,
                                              bool has_term) const {
  return impl_->Handle(path, query_term, has_term);
}

}  // namespace evalsense
