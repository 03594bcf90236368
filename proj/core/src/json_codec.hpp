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

#ifndef EVALSENSE_SRC_JSON_CODEC_HPP_
#define EVALSENSE_SRC_JSON_CODEC_HPP_

#include <span>

#include <json.hpp>

#include "evalsense/report.hpp"

namespace evalsense::internal {

nlohmann::ordered_json ToJson(const ReportMetadata& metadata);
nlohmann::ordered_json ToJson(const GeneralStats& general);
nlohmann::ordered_json ToJson(const TopicReport& report);
nlohmann::ordered_json ToJson(std::span<const TopicReport> topics);

}  // namespace evalsense::internal

#endif  // EVALSENSE_SRC_JSON_CODEC_HPP_
