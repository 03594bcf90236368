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

#include "evalsense/ingest.hpp"

#include <algorithm>
#include <array>
#include <charconv>

#include <fmt/format.h>

#include "evalsense/csv.hpp"
#include "evalsense/errors.hpp"
#include "evalsense/text.hpp"

namespace evalsense {
namespace {

namespace fs = std::filesystem;

constexpr std::size_t kColumns = 3;

std::optional<int> ParseRating(std::string_view cell, std::string_view file,
                               std::size_t record) {
  cell = text::Trim(cell);
  if (cell.empty()) return std::nullopt;
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw ValidationError(fmt::format(
        "{}: row {}: overall_rating '{}' is not an integer", file, record,
        cell));
  }
  if (value < 0 || value > 9) {
    throw ValidationError(fmt::format(
        "{}: row {}: overall_rating {} is outside 0-9", file, record, value));
  }
  return value;
}

// `source` is used in messages, `name` in ids.
void AppendRecords(const std::vector<csv::Record>& records,
                   std::string_view source, std::string_view name,
                   Dataset& out) {
  if (records.empty()) {
    throw FormatError(fmt::format("{}: missing header, expected '{}'", source,
                                  kReviewHeader));
  }
  const auto& header = records.front().fields;
  bool header_ok = header.size() == kColumns;
  static constexpr std::array<std::string_view, kColumns> kNames = {
      "author_id", "comment", "overall_rating"};
  for (std::size_t i = 0; header_ok && i < kColumns; ++i) {
    header_ok = text::Trim(header[i]) == kNames[i];
  }
  if (!header_ok) {
    throw FormatError(fmt::format("{}: malformed header, expected '{}'", source,
                                  kReviewHeader));
  }

  for (std::size_t r = 1; r < records.size(); ++r) {
    const csv::Record& record = records[r];
    if (record.fields.size() != kColumns) {
      throw FormatError(fmt::format("{}: row {}: expected {} fields, got {}",
                                    source, record.number, kColumns,
                                    record.fields.size()));
    }
    const std::string_view raw_author = text::Trim(record.fields[0]);
    if (raw_author.empty()) {
      throw ValidationError(
          fmt::format("{}: row {}: author_id is empty", source, record.number));
    }
    Review review;
    review.review_id = fmt::format("{}#{}", name, record.number);
    review.course_file = std::string(name);
    review.author_id = fmt::format("{}:{}", name, raw_author);
    review.text = record.fields[1];
    review.overall_rating = ParseRating(record.fields[2], source, record.number);
    out.reviews.push_back(std::move(review));
  }
  out.source_files.emplace_back(name);
}

}  // namespace

std::vector<fs::path> ExpandInputs(std::span<const fs::path> inputs) {
  std::vector<fs::path> files;
  for (const fs::path& input : inputs) {
    std::error_code ec;
    if (fs::is_directory(input, ec)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(input)) {
        if (entry.is_regular_file() && entry.path().extension() == ".csv") {
          found.push_back(entry.path());
        }
      }
      std::sort(found.begin(), found.end(),
                [](const fs::path& a, const fs::path& b) {
                  return a.filename().string() < b.filename().string();
                });
      files.insert(files.end(), found.begin(), found.end());
    } else if (fs::exists(input, ec)) {
      files.push_back(input);
    } else {
      throw IoError(input.string() + ": no such file or directory");
    }
  }
  return files;
}

Dataset LoadReviews(std::span<const fs::path> paths) {
  Dataset dataset;
  for (const fs::path& path : ExpandInputs(paths)) {
    const std::string content = text::ReadFile(path.string());
    const std::string name = path.filename().string();
    AppendRecords(csv::Parse(content, path.string()), path.string(), name,
                  dataset);
  }
  return dataset;
}

Dataset LoadReviewsFromString(std::string_view csv_text,
                              std::string_view name) {
  Dataset dataset;
  AppendRecords(csv::Parse(csv_text, name), name, name, dataset);
  return dataset;
}

}  // namespace evalsense
