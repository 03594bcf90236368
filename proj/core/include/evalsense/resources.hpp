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

#ifndef EVALSENSE_RESOURCES_HPP_
#define EVALSENSE_RESOURCES_HPP_

#include <string_view>

// Default data files compiled into the library.
namespace evalsense::resources {

std::string_view DefaultLexicon();
std::string_view DefaultStopWords();
std::string_view DefaultFixedTopics();

}  // namespace evalsense::resources

#endif  // EVALSENSE_RESOURCES_HPP_
