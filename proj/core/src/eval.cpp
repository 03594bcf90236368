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

#include "evalsense/eval.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>

#include <boost/math/distributions/normal.hpp>
#include <fmt/format.h>

#include "evalsense/csv.hpp"
#include "evalsense/errors.hpp"
#include "evalsense/parser.hpp"
#include "evalsense/text.hpp"

namespace evalsense {
namespace {

void CheckClass(int score, std::string_view what) {
  if (score < 1 || score > kNumClasses) {
    throw InvalidArgument(fmt::format("{} {} is outside 1-5", what, score));
  }
}

void CheckOpenUnit(double value, std::string_view name) {
  if (!(value > 0.0 && value < 1.0)) {
    throw InvalidArgument(
        fmt::format("{} must lie in (0, 1), got {}", name, value));
  }
}

// Uniform draw from [0, range) without modulo bias.
std::uint64_t Bounded(std::mt19937_64& gen, std::uint64_t range) {
  const std::uint64_t threshold = (0 - range) % range;
  for (;;) {
    const std::uint64_t r = gen();
    if (r >= threshold) return r % range;
  }
}

std::vector<LabeledPhrase> FromRecords(const std::vector<csv::Record>& records,
                                       std::string_view source) {
  if (records.empty() || records.front().fields.size() < 2 ||
      text::ToLowerAscii(text::Trim(records.front().fields[0])) != "text") {
    throw FormatError(fmt::format(
        "{}: malformed header, expected 'text,label_1,...,label_k'", source));
  }
  const std::size_t columns = records.front().fields.size();
  std::vector<LabeledPhrase> out;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const csv::Record& record = records[r];
    if (record.fields.size() != columns) {
      throw FormatError(fmt::format("{}: row {}: expected {} fields, got {}",
                                    source, record.number, columns,
                                    record.fields.size()));
    }
    std::vector<int> labels;
    for (std::size_t c = 1; c < columns; ++c) {
      const std::string_view cell = text::Trim(record.fields[c]);
      if (cell.empty()) continue;
      int value = 0;
      const auto [ptr, ec] =
          std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (ec != std::errc() || ptr != cell.data() + cell.size() || value < 1 ||
          value > kNumClasses) {
        throw ValidationError(fmt::format(
            "{}: row {}: label '{}' is not an integer in 1-5", source,
            record.number, cell));
      }
      labels.push_back(value);
    }
    if (labels.empty()) {
      throw ValidationError(
          fmt::format("{}: row {}: no labels", source, record.number));
    }
    if (text::Trim(record.fields[0]).empty()) {
      throw ValidationError(
          fmt::format("{}: row {}: text is empty", source, record.number));
    }
    out.push_back(LabeledPhrase::Make(record.fields[0], std::move(labels)));
  }
  return out;
}

}  // namespace

int AggregateLabel(std::span<const int> labels) {
  if (labels.empty()) throw InvalidArgument("cannot aggregate zero labels");
  for (int label : labels) CheckClass(label, "label");
  std::vector<int> sorted(labels.begin(), labels.end());
  std::sort(sorted.begin(), sorted.end());
  // Lower middle for even counts keeps the result an integer class.
  return sorted[(sorted.size() - 1) / 2];
}

LabeledPhrase LabeledPhrase::Make(std::string_view text,
                                  std::vector<int> labels) {
  LabeledPhrase out;
  out.normalized_text = Normalize(text::Trim(text));
  out.true_score = AggregateLabel(labels);
  out.labels = std::move(labels);
  return out;
}

std::vector<LabeledPhrase> LoadLabeled(const std::string& path) {
  return FromRecords(csv::ReadFile(path), path);
}

std::vector<LabeledPhrase> LoadLabeledFromString(std::string_view csv_text,
                                                 std::string_view name) {
  return FromRecords(csv::Parse(csv_text, name), name);
}

SplitSizes ComputeSplitSizes(std::size_t n) {
  if (n < 3) {
    throw InvalidArgument(
        fmt::format("splitting needs at least 3 items, got {}", n));
  }
  SplitSizes sizes;
  sizes.train = n * 8 / 10;
  const std::size_t rest = n - sizes.train;
  sizes.validation = (rest + 1) / 2;
  sizes.test = rest - sizes.validation;
  return sizes;
}

std::vector<std::size_t> ShuffledIndices(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::mt19937_64 gen(seed);
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(Bounded(gen, i));
    std::swap(order[i - 1], order[j]);
  }
  return order;
}

ConfusionMatrix Confusion(std::span<const int> predictions,
                          std::span<const int> truths) {
  if (predictions.size() != truths.size()) {
    throw InvalidArgument(fmt::format(
        "{} predictions but {} truths", predictions.size(), truths.size()));
  }
  if (predictions.empty()) {
    throw InvalidArgument("confusion matrix needs at least one pair");
  }
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    CheckClass(predictions[i], "prediction");
    CheckClass(truths[i], "truth");
    ++cm.counts[truths[i] - 1][predictions[i] - 1];
  }
  cm.total = static_cast<long>(predictions.size());
  return cm;
}

Metrics ComputeMetrics(const ConfusionMatrix& cm) {
  if (cm.total <= 0) throw InvalidArgument("confusion matrix is empty");
  Metrics m;
  long trace = 0;
  long near = 0;
  for (int a = 0; a < kNumClasses; ++a) {
    long row_total = 0;
    long row_near = 0;
    for (int p = 0; p < kNumClasses; ++p) {
      const long n = cm.counts[a][p];
      row_total += n;
      if (std::abs(a - p) <= 1) row_near += n;
    }
    trace += cm.counts[a][a];
    near += row_near;
    if (row_total == 0) continue;
    for (int p = 0; p < kNumClasses; ++p) {
      m.row_percent[a][p] = 100.0 * static_cast<double>(cm.counts[a][p]) /
                            static_cast<double>(row_total);
    }
    m.row_within_one[a] =
        100.0 * static_cast<double>(row_near) / static_cast<double>(row_total);
  }
  m.accuracy = static_cast<double>(trace) / static_cast<double>(cm.total);
  m.within_one = static_cast<double>(near) / static_cast<double>(cm.total);
  return m;
}

double CriticalValue(double confidence) {
  CheckOpenUnit(confidence, "confidence");
  const boost::math::normal standard;
  return boost::math::quantile(standard, 1.0 - (1.0 - confidence) / 2.0);
}

long SampleSize(const SampleSizeParams& params) {
  if (params.population <= 0) {
    throw InvalidArgument(fmt::format("population must be positive, got {}",
                                      params.population));
  }
  CheckOpenUnit(params.proportion, "proportion");
  CheckOpenUnit(params.margin, "margin of error");
  const double z = CriticalValue(params.confidence);
  const double p = params.proportion;
  const double x = z * z * p * (1.0 - p) / (params.margin * params.margin);
  const auto big_n = static_cast<double>(params.population);
  const double n = big_n * x / (x + big_n - 1.0);
  // Absorb floating noise so an exact integer is not pushed up by one.
  return static_cast<long>(std::ceil(n - 1e-9));
}

double MarginOfError(long n, double proportion, double confidence) {
  if (n < 1) {
    throw InvalidArgument(fmt::format("sample size must be >= 1, got {}", n));
  }
  CheckOpenUnit(proportion, "proportion");
  const double z = CriticalValue(confidence);
  return z * std::sqrt(proportion * (1.0 - proportion) /
                       static_cast<double>(n));
}

double ConsensusFraction(std::span<const LabeledPhrase> labeled,
                         double threshold) {
  if (labeled.empty()) throw InvalidArgument("no labeled phrases");
  if (!(threshold > 0.5 && threshold <= 1.0)) {
    throw InvalidArgument(
        fmt::format("consensus threshold must lie in (0.5, 1], got {}",
                    threshold));
  }
  long agreed = 0;
  for (const LabeledPhrase& item : labeled) {
    if (item.labels.empty()) {
      throw InvalidArgument(
          fmt::format("phrase '{}' has no labels", item.normalized_text));
    }
    std::array<long, kNumClasses> counts{};
    for (int label : item.labels) {
      CheckClass(label, "label");
      ++counts[label - 1];
    }
    const long modal = *std::max_element(counts.begin(), counts.end());
    const double share =
        static_cast<double>(modal) / static_cast<double>(item.labels.size());
    if (share >= threshold) ++agreed;
  }
  return static_cast<double>(agreed) / static_cast<double>(labeled.size());
}

}  // namespace evalsense
