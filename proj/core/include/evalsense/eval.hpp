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

#ifndef EVALSENSE_EVAL_HPP_
#define EVALSENSE_EVAL_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evalsense {

// Lower median of 1-5 labels. Throws InvalidArgument on an empty list or a
// label outside [1, 5].
int AggregateLabel(std::span<const int> labels);

struct LabeledPhrase {
  std::string normalized_text;
  std::vector<int> labels;
  int true_score = 3;

  // Normalizes the text and derives true_score with AggregateLabel.
  static LabeledPhrase Make(std::string_view text, std::vector<int> labels);
};

// Reads `text,label_1,...,label_k`. Blank label cells mean the labeler
// skipped the phrase; a row with no labels at all is a ValidationError.
std::vector<LabeledPhrase> LoadLabeled(const std::string& path);
std::vector<LabeledPhrase> LoadLabeledFromString(std::string_view csv_text,
                                                 std::string_view name);

struct SplitSizes {
  std::size_t train = 0;
  std::size_t validation = 0;
  std::size_t test = 0;

  bool operator==(const SplitSizes&) const = default;
};

// train = floor(0.8 n); the rest is halved with validation taking the odd
// item. Throws InvalidArgument for n < 3.
SplitSizes ComputeSplitSizes(std::size_t n);

// Seeded Fisher-Yates permutation of [0, n). Uses mt19937_64 with
// rejection sampling, so results are identical across standard libraries.
std::vector<std::size_t> ShuffledIndices(std::size_t n, std::uint64_t seed);

template <typename T>
struct SplitDataset {
  std::vector<T> train;
  std::vector<T> validation;
  std::vector<T> test;
};

template <typename T>
SplitDataset<T> SplitItems(std::span<const T> items, std::uint64_t seed) {
  const SplitSizes sizes = ComputeSplitSizes(items.size());
  const std::vector<std::size_t> order = ShuffledIndices(items.size(), seed);
  SplitDataset<T> out;
  out.train.reserve(sizes.train);
  out.validation.reserve(sizes.validation);
  out.test.reserve(sizes.test);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const T& item = items[order[i]];
    if (i < sizes.train) {
      out.train.push_back(item);
    } else if (i < sizes.train + sizes.validation) {
      out.validation.push_back(item);
    } else {
      out.test.push_back(item);
    }
  }
  return out;
}

inline constexpr int kNumClasses = 5;

// counts[actual - 1][predicted - 1].
struct ConfusionMatrix {
  std::array<std::array<long, kNumClasses>, kNumClasses> counts{};
  long total = 0;

  bool operator==(const ConfusionMatrix&) const = default;
};

// Throws InvalidArgument on length mismatch, empty input or a score
// outside [1, 5].
ConfusionMatrix Confusion(std::span<const int> predictions,
                          std::span<const int> truths);

struct Metrics {
  double accuracy = 0.0;
  double within_one = 0.0;
  // Percent of each actual-class row; all-zero rows stay zero.
  std::array<std::array<double, kNumClasses>, kNumClasses> row_percent{};
  // Within-one accuracy restricted to each actual class, in percent.
  std::array<double, kNumClasses> row_within_one{};
};

// Throws InvalidArgument when the matrix is empty.
Metrics ComputeMetrics(const ConfusionMatrix& cm);

// Two-sided standard normal critical value, e.g. 0.95 -> 1.959964.
double CriticalValue(double confidence);

struct SampleSizeParams {
  long population = 0;       // N > 0
  double confidence = 0.95;  // in (0, 1)
  double proportion = 0.5;   // p in (0, 1)
  double margin = 0.05;      // E in (0, 1)
};

// Finite-population sample size n = N X / (X + N - 1) with
// X = Z^2 p (1 - p) / E^2, rounded up.
long SampleSize(const SampleSizeParams& params);

// E = Z sqrt(p (1 - p) / n).
double MarginOfError(long n, double proportion, double confidence);

// Share of items whose most common label reaches `threshold` of that item's
// labels. threshold must lie in (0.5, 1].
double ConsensusFraction(std::span<const LabeledPhrase> labeled,
                         double threshold);

}  // namespace evalsense

#endif  // EVALSENSE_EVAL_HPP_
