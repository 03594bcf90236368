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

#include "evalsense/lexicon.hpp"

#include <charconv>
#include <cmath>

#include <fmt/format.h>

#include "evalsense/errors.hpp"
#include "evalsense/resources.hpp"
#include "evalsense/text.hpp"

namespace evalsense {
namespace {

enum class Section { kValences, kBoosters, kNegators };

constexpr double kMaxValence = 4.0;

bool ValidToken(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    if (text::IsAsciiSpace(c) || (c >= 'A' && c <= 'Z')) return false;
  }
  return true;
}

double ParseNumber(std::string_view field, std::string_view source,
                   std::size_t line) {
  field = text::Trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() ||
      !std::isfinite(value)) {
    throw ValidationError(
        fmt::format("{}: line {}: '{}' is not a number", source, line, field));
  }
  return value;
}

}  // namespace

const double* Lexicon::Valence(std::string_view token) const {
  const auto it = valences.find(std::string(token));
  return it == valences.end() ? nullptr : &it->second;
}

const double* Lexicon::Booster(std::string_view token) const {
  const auto it = boosters.find(std::string(token));
  return it == boosters.end() ? nullptr : &it->second;
}

bool Lexicon::IsNegator(std::string_view token) const {
  return negators.contains(std::string(token));
}

Lexicon Lexicon::Parse(std::string_view content, std::string_view source) {
  Lexicon lexicon;
  Section section = Section::kValences;
  std::size_t line_no = 0;
  while (!content.empty()) {
    const std::size_t nl = content.find('\n');
    std::string_view line = content.substr(0, nl);
    content.remove_prefix(nl == std::string_view::npos ? content.size()
                                                       : nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::Trim(line).empty()) continue;
    if (line.front() == '#') {
      const std::string_view directive = text::Trim(line);
      if (directive == "#boosters") {
        section = Section::kBoosters;
      } else if (directive == "#negators") {
        section = Section::kNegators;
      }
      continue;
    }

    const std::size_t tab = line.find('\t');
    const std::string_view token =
        text::Trim(tab == std::string_view::npos ? line : line.substr(0, tab));
    if (!ValidToken(token)) {
      throw ValidationError(fmt::format(
          "{}: line {}: token must be lowercase without spaces", source,
          line_no));
    }

    if (section == Section::kNegators) {
      lexicon.negators.emplace(token);
      continue;
    }
    if (tab == std::string_view::npos) {
      throw ValidationError(fmt::format(
          "{}: line {}: expected token<TAB>value", source, line_no));
    }
    const double value = ParseNumber(line.substr(tab + 1), source, line_no);
    if (section == Section::kBoosters) {
      lexicon.boosters[std::string(token)] = value;
    } else {
      if (std::fabs(value) > kMaxValence) {
        throw ValidationError(fmt::format(
            "{}: line {}: valence {} outside [-4, 4]", source, line_no, value));
      }
      lexicon.valences[std::string(token)] = value;
    }
  }
  return lexicon;
}

Lexicon Lexicon::Load(const std::string& path) {
  return Parse(text::ReadFile(path), path);
}

const Lexicon& Lexicon::Default() {
  static const Lexicon lexicon =
      Parse(resources::DefaultLexicon(), "<builtin lexicon>");
  return lexicon;
}

}  // namespace evalsense
