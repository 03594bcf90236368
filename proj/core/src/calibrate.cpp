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

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <vector>

#include <fmt/format.h>

#include "evalsense/errors.hpp"
#include "evalsense/sentiment.hpp"
#include "parallel.hpp"

namespace evalsense {
namespace {

// Items sorted by compound with per-label prefix counts, so the confusion
// totals of any threshold tuple come from a handful of lookups.
class SortedLabels {
 public:
  explicit SortedLabels(std::vector<std::pair<double, int>> items)
      : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    compounds_.reserve(items_.size());
    for (const auto& item : items_) compounds_.push_back(item.first);
    for (auto& prefix : prefix_) prefix.assign(items_.size() + 1, 0);
    for (std::size_t i = 0; i < items_.size(); ++i) {
      for (int label = 0; label < 5; ++label) {
        prefix_[label][i + 1] =
            prefix_[label][i] + (items_[i].second == label + 1 ? 1 : 0);
      }
    }
  }

  // Index of the first item with compound > t.
  std::size_t UpperBound(double t) const {
    return static_cast<std::size_t>(
        std::upper_bound(compounds_.begin(), compounds_.end(), t) -
        compounds_.begin());
  }
  // Index of the first item with compound >= t.
  std::size_t LowerBound(double t) const {
    return static_cast<std::size_t>(
        std::lower_bound(compounds_.begin(), compounds_.end(), t) -
        compounds_.begin());
  }

  // Segment boundaries for predicted classes 1..5, as produced by MapToFine:
  // (-inf, t1] (t1, t2] (t2, t3) [t3, t4) [t4, inf).
  struct Counts {
    long exact = 0;
    long within_one = 0;
  };
  Counts Evaluate(std::size_t ub1, std::size_t ub2, std::size_t lb3,
                  std::size_t lb4) const {
    const std::array<std::size_t, 6> cut = {0, ub1, ub2, lb3, lb4,
                                            items_.size()};
    Counts counts;
    for (int predicted = 0; predicted < 5; ++predicted) {
      const std::size_t lo = cut[predicted];
      const std::size_t hi = cut[predicted + 1];
      for (int label = std::max(0, predicted - 1);
           label <= std::min(4, predicted + 1); ++label) {
        const long n = prefix_[label][hi] - prefix_[label][lo];
        counts.within_one += n;
        if (label == predicted) counts.exact += n;
      }
    }
    return counts;
  }

 private:
  std::vector<std::pair<double, int>> items_;
  std::vector<double> compounds_;
  std::array<std::vector<long>, 5> prefix_;
};

struct Candidate {
  Thresholds thresholds{};
  long exact = -1;
  long within_one = -1;
};

// Higher exact, then higher within-one, then lexicographically smaller.
bool Better(const Candidate& a, const Candidate& b) {
  if (a.exact != b.exact) return a.exact > b.exact;
  if (a.within_one != b.within_one) return a.within_one > b.within_one;
  return a.thresholds < b.thresholds;
}

std::vector<double> GridPoints(double step) {
  std::vector<double> points;
  for (int i = 1;; ++i) {
    // Snap to 1e-9 so 0.05-style steps produce the decimal values users type.
    const double v = std::round((-1.0 + i * step) * 1e9) / 1e9;
    if (v > 1.0 - step + 1e-9) break;
    points.push_back(v);
  }
  return points;
}

}  // namespace

EngineConfig CalibrateThresholds(std::span<const LabeledText> labeled,
                                 const Lexicon& lexicon,
                                 const EngineConfig& config, double grid_step,
                                 unsigned threads) {
  config.Validate();
  if (labeled.empty()) {
    throw InvalidArgument("calibration needs at least one labeled phrase");
  }
  if (!(grid_step > 0.0 && grid_step <= 0.5)) {
    throw InvalidArgument(
        fmt::format("grid step must lie in (0, 0.5], got {}", grid_step));
  }
  const std::vector<double> grid = GridPoints(grid_step);
  if (grid.size() < 4) {
    throw InvalidArgument(fmt::format(
        "grid step {} leaves {} threshold values; need at least 4", grid_step,
        grid.size()));
  }

  std::vector<std::pair<double, int>> items;
  items.reserve(labeled.size());
  for (const LabeledText& item : labeled) {
    if (item.score < 1 || item.score > 5) {
      throw InvalidArgument(fmt::format(
          "label {} for '{}' is outside 1-5", item.score, item.normalized_text));
    }
    items.emplace_back(CompoundScore(item.normalized_text, lexicon, config),
                       item.score);
  }
  const SortedLabels sorted(std::move(items));

  const auto& t = config.thresholds;
  Candidate incumbent;
  incumbent.thresholds = t;
  {
    const auto counts =
        sorted.Evaluate(sorted.UpperBound(t[0]), sorted.UpperBound(t[1]),
                        sorted.LowerBound(t[2]), sorted.LowerBound(t[3]));
    incumbent.exact = counts.exact;
    incumbent.within_one = counts.within_one;
  }

  std::vector<std::size_t> upper(grid.size());
  std::vector<std::size_t> lower(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    upper[g] = sorted.UpperBound(grid[g]);
    lower[g] = sorted.LowerBound(grid[g]);
  }

  // The outermost loop index is the unit of parallel work; each chunk keeps
  // its own best. Better() is a total order, so merge order is irrelevant.
  const std::size_t g = grid.size();
  const std::size_t workers =
      std::min<std::size_t>(internal::ResolveThreads(threads), g - 3);
  Candidate winner = incumbent;
  std::mutex winner_mutex;
  internal::ParallelChunks(
      g - 3, static_cast<unsigned>(workers),
      [&](std::size_t begin, std::size_t end) {
        Candidate local;
        for (std::size_t a = begin; a < end; ++a) {
          for (std::size_t b = a + 1; b + 2 < g; ++b) {
            for (std::size_t c = b + 1; c + 1 < g; ++c) {
              for (std::size_t d = c + 1; d < g; ++d) {
                const auto counts =
                    sorted.Evaluate(upper[a], upper[b], lower[c], lower[d]);
                if (counts.exact < local.exact) continue;
                Candidate candidate{{grid[a], grid[b], grid[c], grid[d]},
                                    counts.exact,
                                    counts.within_one};
                if (Better(candidate, local)) local = candidate;
              }
            }
          }
        }
        const std::lock_guard lock(winner_mutex);
        if (local.exact >= 0 && Better(local, winner)) winner = local;
      });

  EngineConfig out = config;
  out.thresholds = winner.thresholds;
  return out;
}

}  // namespace evalsense
