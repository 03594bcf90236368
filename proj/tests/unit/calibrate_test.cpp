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


#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "evalsense/errors.hpp"
#include "evalsense/lexicon.hpp"
#include "evalsense/sentiment.hpp"

using namespace evalsense;

namespace {

const std::vector<std::string> kWords = {
    "good",   "great",   "bad",  "boring", "helpful", "terrible", "not",
    "very",   "lecture", "exam", "the",    "was",     "excellent", "confusing",
    "really", "fair",    "hard", "fun",    "awful",   "clear"};

std::vector<LabeledText> RandomLabeled(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<std::size_t> word(0, kWords.size() - 1);
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<int> label(1, 5);
  std::vector<LabeledText> out;
  for (int i = 0; i < n; ++i) {
    std::string text;
    for (int k = len(rng); k > 0; --k) {
      if (!text.empty()) text += ' ';
      text += kWords[word(rng)];
    }
    out.push_back({text, label(rng)});
  }
  return out;
}

// Exhaustive reference: evaluates every tuple with MeasureAccuracy.
Thresholds BruteCalibrate(const std::vector<LabeledText>& labeled,
                          const EngineConfig& base, std::vector<double> grid) {
  EngineConfig best = base;
  EngineAccuracy best_acc = MeasureAccuracy(labeled, Lexicon::Default(), base);
  auto better = [&](const EngineAccuracy& a, const Thresholds& ta) {
    const long ae = std::lround(a.exact * labeled.size());
    const long be = std::lround(best_acc.exact * labeled.size());
    if (ae != be) return ae > be;
    const long aw = std::lround(a.within_one * labeled.size());
    const long bw = std::lround(best_acc.within_one * labeled.size());
    if (aw != bw) return aw > bw;
    return ta < best.thresholds;
  };
  const std::size_t g = grid.size();
  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t b = a + 1; b < g; ++b)
      for (std::size_t c = b + 1; c < g; ++c)
        for (std::size_t d = c + 1; d < g; ++d) {
          EngineConfig cfg = base;
          cfg.thresholds = {grid[a], grid[b], grid[c], grid[d]};
          const auto acc = MeasureAccuracy(labeled, Lexicon::Default(), cfg);
          if (better(acc, cfg.thresholds)) {
            best = cfg;
            best_acc = acc;
          }
        }
  return best.thresholds;
}

}  // namespace

TEST_CASE("single positive item picks the smallest tuple") {
  const std::vector<LabeledText> one{{"good", 5}};
  const EngineConfig cfg =
      CalibrateThresholds(one, Lexicon::Default(), EngineConfig{}, 0.05);
  const Thresholds expected{-0.95, -0.90, -0.85, -0.80};
  for (int i = 0; i < 4; ++i) {
    CHECK(cfg.thresholds[i] == doctest::Approx(expected[i]).epsilon(1e-12));
  }
}

TEST_CASE("invalid calibration input") {
  const std::vector<LabeledText> one{{"good", 5}};
  CHECK_THROWS_AS(
      CalibrateThresholds(one, Lexicon::Default(), EngineConfig{}, 0.6),
      InvalidArgument);
  CHECK_THROWS_AS(
      CalibrateThresholds({}, Lexicon::Default(), EngineConfig{}, 0.05),
      InvalidArgument);
  const std::vector<LabeledText> bad{{"good", 7}};
  CHECK_THROWS_AS(
      CalibrateThresholds(bad, Lexicon::Default(), EngineConfig{}, 0.05),
      InvalidArgument);
}

TEST_CASE("separable data keeps full accuracy") {
  const std::vector<LabeledText> data{
      {"terrible awful", 1}, {"boring", 2}, {"the lecture", 3},
      {"good", 4},           {"excellent great", 5}};
  const EngineConfig base;
  REQUIRE(MeasureAccuracy(data, Lexicon::Default(), base).exact == 1.0);
  const EngineConfig tuned =
      CalibrateThresholds(data, Lexicon::Default(), base, 0.05);
  CHECK(MeasureAccuracy(data, Lexicon::Default(), tuned).exact == 1.0);
}

TEST_CASE("fast search matches the exhaustive reference") {
  std::mt19937_64 rng(3);
  const double step = 0.25;
  const std::vector<double> grid{-0.75, -0.5, -0.25, 0.0, 0.25, 0.5, 0.75};
  for (int trial = 0; trial < 20; ++trial) {
    const auto labeled = RandomLabeled(rng, 40);
    const EngineConfig tuned =
        CalibrateThresholds(labeled, Lexicon::Default(), EngineConfig{}, step);
    CHECK(tuned.thresholds == BruteCalibrate(labeled, EngineConfig{}, grid));
  }
}

TEST_CASE("threads do not change the result") {
  std::mt19937_64 rng(5);
  const auto labeled = RandomLabeled(rng, 200);
  const EngineConfig one =
      CalibrateThresholds(labeled, Lexicon::Default(), EngineConfig{}, 0.1, 1);
  const EngineConfig four =
      CalibrateThresholds(labeled, Lexicon::Default(), EngineConfig{}, 0.1, 4);
  CHECK(one == four);
}

TEST_CASE("calibration never lowers accuracy on the calibration set") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const auto labeled = RandomLabeled(rng, 60);
    const EngineConfig base;
    const EngineConfig tuned =
        CalibrateThresholds(labeled, Lexicon::Default(), base, 0.1);
    CHECK(MeasureAccuracy(labeled, Lexicon::Default(), tuned).exact >=
          MeasureAccuracy(labeled, Lexicon::Default(), base).exact);
  }
}
