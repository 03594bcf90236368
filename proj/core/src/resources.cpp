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

#include "evalsense/resources.hpp"

namespace evalsense::detail {
extern const std::string_view k_lexicon_tsv;
extern const std::string_view k_stopwords_txt;
extern const std::string_view k_fixed_topics_txt;
}  // namespace evalsense::detail

namespace evalsense::resources {

std::string_view DefaultLexicon() { return detail::k_lexicon_tsv; }
std::string_view DefaultStopWords() { return detail::k_stopwords_txt; }
std::string_view DefaultFixedTopics() { return detail::k_fixed_topics_txt; }

}  // namespace evalsense::resources
