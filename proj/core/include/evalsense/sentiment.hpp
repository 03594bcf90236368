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

#ifndef EVALSENSE_SENTIMENT_HPP_
#define EVALSENSE_SENTIMENT_HPP_

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evalsense/lexicon.hpp"
#include "evalsense/parser.hpp"

namespace evalsense {

// Fine-grained score: 1 more negative, 3 neutral, 5 more positive.
class SentimentScore {
 public:
  // Throws InvalidArgument outside [1, 5].
  explicit SentimentScore(int value);

  int value() const { return value_; }
  bool operator==(const SentimentScore&) const = default;
  auto operator<=>(const SentimentScore&) const = default;

 private:
  int value_;
};

using Thresholds = std::array<double, 4>;

struct EngineConfig {
  double alpha = 15.0;
  double negation_factor = -0.74;
  int negation_window = 3;
  Thresholds thresholds{-0.45, -0.10, 0.10, 0.45};
  double binary_band = 0.05;

  // Throws InvalidArgument unless -1 < t1 < t2 < t3 < t4 < 1, alpha > 0,
  // 0 < binary_band < 1 and negation_window >= 0.
  void Validate() const;

  bool operator==(const EngineConfig&) const = default;
};

enum class Polarity { kNegative, kNeutral, kPositive };

std::string_view PolarityName(Polarity p);

struct BinaryPolarity {
  double compound = 0.0;
  Polarity label = Polarity::kNeutral;

  bool operator==(const BinaryPolarity&) const = default;
};

struct ScoredPhrase {
  Phrase phrase;
  SentimentScore fine{3};
  BinaryPolarity binary;
  bool agrees = false;

  bool operator==(const ScoredPhrase&) const = default;
};

// Sums token valences (boosted by up to two directly preceding boosters and
// scaled by negation_factor when a negator sits within negation_window
// preceding tokens) and squashes the sum s to s / sqrt(s^2 + alpha).
// Returns 0 when no token is in the lexicon.
double CompoundScore(std::string_view normalized_text, const Lexicon& lexicon,
                     const EngineConfig& config);

// Raw valence sum before squashing; exposed for diagnostics and tests.
double ValenceSum(std::string_view normalized_text, const Lexicon& lexicon,
                  const EngineConfig& config);

SentimentScore MapToFine(double compound, const Thresholds& thresholds);
inline SentimentScore MapToFine(double compound, const EngineConfig& config) {
  return MapToFine(compound, config.thresholds);
}

BinaryPolarity ToBinaryPolarity(double compound, const EngineConfig& config);

// True when the fine score and binary label land on the same side.
bool Agrees(SentimentScore fine, Polarity label);

// Produces a fine score for one phrase. Implementations must be safe to call
// concurrently from several threads.
class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual std::string Id() const = 0;
  virtual SentimentScore Score(const Phrase& phrase) const = 0;
};

// The built-in lexicon/rule engine.
class LexiconScorer final : public Scorer {
 public:
  LexiconScorer(Lexicon lexicon, EngineConfig config);
  std::string Id() const override;
  SentimentScore Score(const Phrase& phrase) const override;

 private:
  Lexicon lexicon_;
  EngineConfig config_;
};

// Returns the same score for everything. Test double.
class ConstantScorer final : public Scorer {
 public:
  explicit ConstantScorer(int value) : value_(value) {}
  std::string Id() const override;
  SentimentScore Score(const Phrase& phrase) const override;

 private:
  SentimentScore value_;
};

// Delegates to an HTTP model endpoint:
//   POST <path>  {"text": "..."}  ->  {"score": 1..5}
// Any transport failure or malformed reply throws ScoringError.
class RemoteScorer final : public Scorer {
 public:
  // `base_url` is scheme://host[:port]; `path` defaults to "/score".
  explicit RemoteScorer(std::string base_url, std::string path = "/score",
                        double timeout_seconds = 10.0);
  std::string Id() const override;
  SentimentScore Score(const Phrase& phrase) const override;

 private:
  std::string base_url_;
  std::string path_;
  double timeout_seconds_;
};

// Scores every phrase with `scorer` and cross-checks it against the built-in
// compound. Work is split across `threads` workers (0 = hardware
// concurrency); output order always matches input order. A scorer failure
// is rethrown as ScoringError naming the phrase id.
std::vector<ScoredPhrase> ScorePhrases(std::span<const Phrase> phrases,
                                       const Scorer& scorer,
                                       const Lexicon& lexicon,
                                       const EngineConfig& config,
                                       unsigned threads = 1);

struct LabeledText {
  std::string normalized_text;
  int score = 3;  // 1-5
};

// Grid search for the fine-score cut points.
//
// Candidates are every strictly increasing 4-tuple drawn from
// {-1 + step, -1 + 2 step, ..., 1 - step} plus the incumbent thresholds in
// `config`. The winner maximizes exact accuracy, then within-one accuracy,
// then is the lexicographically smallest tuple. Throws InvalidArgument for
// an empty set, a step outside (0, 0.5] or a grid with fewer than 4 points.
EngineConfig CalibrateThresholds(std::span<const LabeledText> labeled,
                                 const Lexicon& lexicon,
                                 const EngineConfig& config, double grid_step,
                                 unsigned threads = 1);

// Exact and within-one accuracy of the rule engine on `labeled`.
struct EngineAccuracy {
  double exact = 0.0;
  double within_one = 0.0;
};
EngineAccuracy MeasureAccuracy(std::span<const LabeledText> labeled,
                               const Lexicon& lexicon,
                               const EngineConfig& config);

}  // namespace evalsense

#endif  // EVALSENSE_SENTIMENT_HPP_
