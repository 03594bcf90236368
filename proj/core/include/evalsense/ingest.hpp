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

#ifndef EVALSENSE_INGEST_HPP_
#define EVALSENSE_INGEST_HPP_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace evalsense {

// One student's evaluation as exported from the course-review system.
struct Review {
  std::string review_id;  // "<file>#<record>", unique within a Dataset
  std::string course_file;
  std::string author_id;  // "<file>:<raw id>"
  std::string text;
  std::optional<int> overall_rating;  // 0-9 when present

  bool operator==(const Review&) const = default;
};

struct Dataset {
  std::vector<Review> reviews;  // files in the order given, rows in file order
  std::vector<std::string> source_files;

  bool operator==(const Dataset&) const = default;
};

// Header every review export must carry.
inline constexpr std::string_view kReviewHeader =
    "author_id,comment,overall_rating";

// Expands directories to their *.csv files in lexicographic filename order.
// Plain files are kept in place. Throws IoError for paths that do not exist.
std::vector<std::filesystem::path> ExpandInputs(
    std::span<const std::filesystem::path> inputs);

// Loads review exports; directories expand as in ExpandInputs. Throws
// IoError for unreadable files, FormatError for a bad header or column count,
// ValidationError for a rating that is not an integer in [0, 9]. Every message names the file and, for row errors, the
// record number.
Dataset LoadReviews(std::span<const std::filesystem::path> paths);

// Same as LoadReviews but over in-memory CSV text; `name` plays the role of
// the filename.
Dataset LoadReviewsFromString(std::string_view csv_text, std::string_view name);

}  // namespace evalsense

#endif  // EVALSENSE_INGEST_HPP_
