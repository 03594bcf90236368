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

#include <cmath>

#include <fmt/format.h>
#include <httplib.h>
#include <json.hpp>

#include "evalsense/errors.hpp"
#include "evalsense/sentiment.hpp"

namespace evalsense {

LexiconScorer::LexiconScorer(Lexicon lexicon, EngineConfig config)
    : lexicon_(std::move(lexicon)), config_(config) {
  config_.Validate();
}

std::string LexiconScorer::Id() const {
  const auto& t = config_.thresholds;
  return fmt::format("lexicon-rules(t={:g},{:g},{:g},{:g})", t[0], t[1], t[2],
                     t[3]);
}

SentimentScore LexiconScorer::Score(const Phrase& phrase) const {
  return MapToFine(CompoundScore(phrase.normalized_text, lexicon_, config_),
                   config_);
}

std::string ConstantScorer::Id() const {
  return fmt::format("constant({})", value_.value());
}

SentimentScore ConstantScorer::Score(const Phrase&) const { return value_; }

RemoteScorer::RemoteScorer(std::string base_url, std::string path,
                           double timeout_seconds)
    : base_url_(std::move(base_url)),
      path_(std::move(path)),
      timeout_seconds_(timeout_seconds) {
  if (base_url_.empty()) throw InvalidArgument("remote scorer needs a URL");
  if (path_.empty() || path_.front() != '/') path_.insert(0, "/");
}

std::string RemoteScorer::Id() const {
  return fmt::format("remote({}{})", base_url_, path_);
}

SentimentScore RemoteScorer::Score(const Phrase& phrase) const {
  // One client per call: httplib clients are not shareable across threads.
  httplib::Client client(base_url_);
  const auto seconds = static_cast<time_t>(timeout_seconds_);
  const auto micros = static_cast<time_t>(
      std::fmod(timeout_seconds_, 1.0) * 1'000'000.0);
  client.set_connection_timeout(seconds, micros);
  client.set_read_timeout(seconds, micros);

  const nlohmann::json request = {{"text", phrase.normalized_text}};
  const auto response =
      client.Post(path_, request.dump(), "application/json");
  if (!response) {
    throw ScoringError(fmt::format("{}: {}", Id(),
                                   httplib::to_string(response.error())));
  }
  if (response->status != 200) {
    throw ScoringError(
        fmt::format("{}: HTTP status {}", Id(), response->status));
  }
  const nlohmann::json reply =
      nlohmann::json::parse(response->body, nullptr, /*allow_exceptions=*/false);
  if (!reply.is_object() || !reply.contains("score") ||
      !reply["score"].is_number_integer()) {
    throw ScoringError(fmt::format("{}: reply lacks an integer 'score'", Id()));
  }
  return SentimentScore(reply["score"].get<int>());
}

}  // namespace evalsense
