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

#ifndef EVALSENSE_TEXT_HPP_
#define EVALSENSE_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

// Byte-level text helpers shared by the parser, scorer and topic matcher.
// Non-ASCII bytes are treated as letters so UTF-8 words stay intact.
namespace evalsense::text {

inline bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

inline bool IsLetter(char c) {
  const auto u = static_cast<unsigned char>(c);
  return (u >= 'a' && u <= 'z') || (u >= 'A' && u <= 'Z') || u >= 0x80;
}

inline bool IsDigit(char c) { return c >= '0' && c <= '9'; }

inline bool IsWordChar(char c) { return IsLetter(c) || IsDigit(c); }

std::string ToLowerAscii(std::string_view s);

std::string_view Trim(std::string_view s);

// Lowercases ASCII, collapses whitespace runs to one space, trims.
std::string CollapseWhitespace(std::string_view s);

// Splits on anything that is not a letter. Used for word counting and
// topic matching.
std::vector<std::string> LetterTokens(std::string_view s);

// Splits on whitespace and punctuation, keeping apostrophes and hyphens
// that sit between two word characters ("didn't", "fast-paced").
std::vector<std::string> WordTokens(std::string_view s);

// Reads a whole file into memory. Throws IoError.
std::string ReadFile(const std::string& path);

}  // namespace evalsense::text

#endif  // EVALSENSE_TEXT_HPP_
