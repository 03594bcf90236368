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

#ifndef EVALSENSE_CSV_HPP_
#define EVALSENSE_CSV_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace evalsense::csv {

struct Record {
  // 1-based record number in the file; the header is record 1.
  std::size_t number = 0;
  std::vector<std::string> fields;
};

// Parses RFC-4180 CSV. Quoted fields may contain commas, doubled quotes and
// line breaks; CRLF and LF line endings are both accepted and a leading
// UTF-8 byte order mark is skipped. Blank lines are ignored. `source` names
// the input in error messages.
std::vector<Record> Parse(std::string_view text, std::string_view source);

// Reads and parses a whole file. Throws IoError if it cannot be read.
std::vector<Record> ReadFile(const std::string& path);

// Quotes a field when it contains a comma, quote or line break.
std::string Escape(std::string_view field);

}  // namespace evalsense::csv

#endif  // EVALSENSE_CSV_HPP_
