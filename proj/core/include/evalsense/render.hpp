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

#ifndef EVALSENSE_RENDER_HPP_
#define EVALSENSE_RENDER_HPP_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "evalsense/report.hpp"

namespace evalsense {

enum class Format { kLatex, kHtml, kJson };

// Accepts "latex", "tex", "html" and "json". Throws InvalidArgument.
Format ParseFormat(std::string_view name);
std::string_view FormatName(Format format);

// All renderers are pure functions of the bundle: identical bundles give
// identical bytes.
std::string RenderLatex(const ReportBundle& bundle);
std::string RenderHtml(const ReportBundle& bundle);
// Top-level keys: metadata, general, topics. See docs/report-schema.md.
std::string RenderJson(const ReportBundle& bundle);
std::string Render(const ReportBundle& bundle, Format format);

// Throws IoError when the file cannot be written.
void RenderToFile(const ReportBundle& bundle, Format format,
                  const std::filesystem::path& out);

// JSON fragments shared with the HTTP service.
std::string GeneralStatsJson(const GeneralStats& general);
std::string TopicsJson(std::span<const TopicReport> topics);
std::string MetadataJson(const ReportMetadata& metadata);

}  // namespace evalsense

#endif  // EVALSENSE_RENDER_HPP_
