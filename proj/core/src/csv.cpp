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

#include "evalsense/csv.hpp"

#include <fmt/format.h>

#include "evalsense/errors.hpp"
#include "evalsense/text.hpp"

namespace evalsense::csv {

std::vector<Record> Parse(std::string_view text, std::string_view source) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  std::vector<Record> records;
  Record current;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  bool record_has_content = false;
  std::size_t record_number = 0;
  std::size_t line = 1;
  std::size_t record_start_line = 1;

  auto end_field = [&] {
    current.fields.push_back(std::move(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_record = [&] {
    end_field();
    // A physical line holding nothing at all is skipped.
    const bool blank = current.fields.size() == 1 &&
                       current.fields[0].empty() && !record_has_content;
    if (!blank) {
      current.number = ++record_number;
      records.push_back(std::move(current));
    }
    current = Record{};
    record_has_content = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || field_was_quoted) {
          throw FormatError(fmt::format(
              "{}: line {}: quote inside an unquoted field", source, line));
        }
        in_quotes = true;
        field_was_quoted = true;
        record_has_content = true;
        break;
      case ',':
        end_field();
        record_has_content = true;
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        [[fallthrough]];
      case '\n':
        end_record();
        ++line;
        record_start_line = line;
        break;
      default:
        if (field_was_quoted) {
          throw FormatError(fmt::format(
              "{}: line {}: text after closing quote", source, line));
        }
        field.push_back(c);
        record_has_content = true;
        break;
    }
  }
  if (in_quotes) {
    throw FormatError(fmt::format(
        "{}: line {}: unterminated quoted field", source, record_start_line));
  }
  if (!field.empty() || record_has_content || !current.fields.empty()) {
    end_record();
  }
  return records;
}

std::vector<Record> ReadFile(const std::string& path) {
  return Parse(text::ReadFile(path), path);
}

std::string Escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace evalsense::csv
