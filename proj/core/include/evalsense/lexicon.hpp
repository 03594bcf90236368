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

#ifndef EVALSENSE_LEXICON_HPP_
#define EVALSENSE_LEXICON_HPP_

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace evalsense {

// Valence dictionary for the rule engine.
//
// File format (UTF-8, one entry per line):
//
//   token<TAB>valence          valences in [-4, 4]
//   #boosters                  following lines are token<TAB>increment
//   #negators                  following lines are bare tokens
//   # anything else            comment
//
// Blank lines are ignored. Tokens must be lowercase without whitespace.
struct Lexicon {
  std::unordered_map<std::string, double> valences;
  std::unordered_map<std::string, double> boosters;
  std::unordered_set<std::string> negators;

  const double* Valence(std::string_view token) const;
  const double* Booster(std::string_view token) const;
  bool IsNegator(std::string_view token) const;

  // Throws ValidationError naming `source` and the line number.
  static Lexicon Parse(std::string_view content, std::string_view source);
  static Lexicon Load(const std::string& path);
  // The starter education-domain lexicon compiled into the library.
  static const Lexicon& Default();
};

}  // namespace evalsense

#endif  // EVALSENSE_LEXICON_HPP_
