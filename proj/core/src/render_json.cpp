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

#include <fstream>

#include <json.hpp>

#include "evalsense/errors.hpp"
#include "evalsense/render.hpp"
#include "json_codec.hpp"

namespace evalsense {

using Json = nlohmann::ordered_json;

namespace internal {

Json ToJson(const ReportMetadata& metadata) {
  Json j;
  j["title"] = metadata.title;
  j["source_files"] = metadata.source_files;
  j["date"] = metadata.date;
  j["scorer_id"] = metadata.scorer_id;
  j["seed"] = metadata.seed ? Json(*metadata.seed) : Json(nullptr);
  return j;
}

Json ToJson(const GeneralStats& general) {
  Json j;
  j["author_mean_hist"] = general.author_mean_hist;
  Json centers = Json::array();
  for (std::size_t i = 0; i < kAuthorMeanBins; ++i) {
    centers.push_back(1.0 + 0.5 * static_cast<double>(i));
  }
  j["author_mean_bin_centers"] = centers;
  j["raw_hist"] = general.raw_hist;
  Json topic_means = Json::array();
  for (const TopicMean& t : general.topic_means) {
    topic_means.push_back({{"term", t.term}, {"mean", t.mean}, {"count", t.count}});
  }
  j["topic_means"] = topic_means;
  Json authors = Json::array();
  for (const AuthorMean& a : general.author_means) {
    authors.push_back(
        {{"author_id", a.author_id}, {"mean", a.mean}, {"phrases", a.phrases}});
  }
  j["author_means"] = authors;
  j["sentiment_norm"] = general.sentiment_norm;
  j["rating_norm"] = general.rating_norm;
  return j;
}

Json ToJson(const TopicReport& report) {
  Json j;
  j["term"] = report.topic.term;
  j["kind"] = TopicKindName(report.topic.kind);
  j["patterns"] = report.topic.patterns;
  j["hist"] = report.hist;
  j["count"] = report.count;
  j["mean"] = report.mean;
  Json exemplars = Json::array();
  for (const Exemplar& e : report.exemplars) {
    exemplars.push_back({{"phrase_id", e.phrase_id},
                         {"raw", e.raw_text},
                         {"score", e.score},
                         {"compound", e.compound},
                         {"agrees", e.agrees}});
  }
  j["exemplars"] = exemplars;
  return j;
}

Json ToJson(std::span<const TopicReport> topics) {
  Json j = Json::array();
  for (const TopicReport& report : topics) j.push_back(ToJson(report));
  return j;
}

}  // namespace internal

std::string RenderJson(const ReportBundle& bundle) {
  Json j;
  j["metadata"] = internal::ToJson(bundle.metadata);
  j["general"] = internal::ToJson(bundle.general);
  j["topics"] = internal::ToJson(std::span<const TopicReport>(bundle.topics));
  return j.dump(2) + "\n";
}

std::string GeneralStatsJson(const GeneralStats& general) {
  return internal::ToJson(general).dump();
}

std::string TopicsJson(std::span<const TopicReport> topics) {
  return internal::ToJson(topics).dump();
}

std::string MetadataJson(const ReportMetadata& metadata) {
  return internal::ToJson(metadata).dump();
}

Format ParseFormat(std::string_view name) {
  if (name == "latex" || name == "tex") return Format::kLatex;
  if (name == "html") return Format::kHtml;
  if (name == "json") return Format::kJson;
  throw InvalidArgument("unknown report format '" + std::string(name) +
                        "' (expected latex, html or json)");
}

std::string_view FormatName(Format format) {
  switch (format) {
    case Format::kLatex:
      return "latex";
    case Format::kHtml:
      return "html";
    case Format::kJson:
      return "json";
  }
  return "json";
}

std::string Render(const ReportBundle& bundle, Format format) {
  switch (format) {
    case Format::kLatex:
      return RenderLatex(bundle);
    case Format::kHtml:
      return RenderHtml(bundle);
    case Format::kJson:
      return RenderJson(bundle);
  }
  return RenderJson(bundle);
}

void RenderToFile(const ReportBundle& bundle, Format format,
                  const std::filesystem::path& out) {
  const std::string content = Render(bundle, format);
  if (out.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(out.parent_path(), ec);
    if (ec) {
      throw IoError(out.parent_path().string() + ": " + ec.message());
    }
  }
  std::ofstream file(out, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError(out.string() + ": cannot open for writing");
  file.write(content.data(), static_cast<std::streamsize>(content.size()));
  file.close();
  if (!file) throw IoError(out.string() + ": write failed");
}

}  // namespace evalsense
