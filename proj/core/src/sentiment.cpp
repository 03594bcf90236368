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

#include "evalsense/sentiment.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "evalsense/errors.hpp"
#include "evalsense/text.hpp"
#include "parallel.hpp"

namespace evalsense {
namespace {

// Boosters are only looked up this far back from a sentiment token.
constexpr std::size_t kMaxBoosters = 2;

}  // namespace

SentimentScore::SentimentScore(int value) : value_(value) {
  if (value < 1 || value > 5) {
    throw InvalidArgument(
        fmt::format("sentiment score {} is outside 1-5", value));
  }
}

void EngineConfig::Validate() const {
  if (!(alpha > 0.0)) {
    throw InvalidArgument(fmt::format("alpha must be positive, got {}", alpha));
  }
  if (negation_window < 0) {
    throw InvalidArgument(fmt::format(
        "negation_window must be non-negative, got {}", negation_window));
  }
  if (!(binary_band > 0.0 && binary_band < 1.0)) {
    throw InvalidArgument(
        fmt::format("binary_band must lie in (0, 1), got {}", binary_band));
  }
  const auto& t = thresholds;
  if (!(-1.0 < t[0] && t[0] < t[1] && t[1] < t[2] && t[2] < t[3] &&
        t[3] < 1.0)) {
    throw InvalidArgument(fmt::format(
        "thresholds must satisfy -1 < t1 < t2 < t3 < t4 < 1, got ({})",
        fmt::join(t, ", ")));
  }
}

std::string_view PolarityName(Polarity p) {
  switch (p) {
    case Polarity::kNegative:
      return "negative";
    case Polarity::kNeutral:
      return "neutral";
    case Polarity::kPositive:
      return "positive";
  }
  return "neutral";
}

double ValenceSum(std::string_view normalized_text, const Lexicon& lexicon,
                  const EngineConfig& config) {
  const std::vector<std::string> tokens = text::WordTokens(normalized_text);
  const auto window = static_cast<std::size_t>(config.negation_window);
  double sum = 0.0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const double* base = lexicon.Valence(tokens[i]);
    if (base == nullptr) continue;
    double valence = *base;

    // Boosters push away from zero in the direction of the word's valence.
    for (std::size_t back = 1; back <= kMaxBoosters && back <= i; ++back) {
      const double* boost = lexicon.Booster(tokens[i - back]);
      if (boost == nullptr) break;
      valence += *base < 0.0 ? -*boost : *boost;
    }

    const std::size_t first = i > window ? i - window : 0;
    for (std::size_t k = first; k < i; ++k) {
      if (lexicon.IsNegator(tokens[k])) {
        valence *= config.negation_factor;
        break;
      }
    }
    sum += valence;
  }
  return sum;
}

double CompoundScore(std::string_view normalized_text, const Lexicon& lexicon,
                     const EngineConfig& config) {
  const double sum = ValenceSum(normalized_text, lexicon, config);
  if (sum == 0.0) return 0.0;
  const double compound = sum / std::sqrt(sum * sum + config.alpha);
  return std::clamp(compound, -1.0, 1.0);
}

SentimentScore MapToFine(double compound, const Thresholds& t) {
  if (compound <= t[0]) return SentimentScore(1);
  if (compound <= t[1]) return SentimentScore(2);
  if (compound < t[2]) return SentimentScore(3);
  if (compound < t[3]) return SentimentScore(4);
  return SentimentScore(5);
}

BinaryPolarity ToBinaryPolarity(double compound, const EngineConfig& config) {
  BinaryPolarity out;
  out.compound = compound;
  if (compound >= config.binary_band) {
    out.label = Polarity::kPositive;
  } else if (compound <= -config.binary_band) {
    out.label = Polarity::kNegative;
  } else {
    out.label = Polarity::kNeutral;
  }
  return out;
}

bool Agrees(SentimentScore fine, Polarity label) {
  switch (label) {
    case Polarity::kPositive:
      return fine.value() >= 4;
    case Polarity::kNegative:
      return fine.value() <= 2;
    case Polarity::kNeutral:
      return fine.value() == 3;
  }
  return false;
}

std::vector<ScoredPhrase> ScorePhrases(std::span<const Phrase> phrases,
                                       const Scorer& scorer,
                                       const Lexicon& lexicon,
                                       const EngineConfig& config,
                                       unsigned threads) {
  config.Validate();
  std::vector<ScoredPhrase> out(phrases.size());
  internal::ParallelChunks(
      phrases.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
          const Phrase& phrase = phrases[i];
          ScoredPhrase& scored = out[i];
          scored.phrase = phrase;
          try {
            scored.fine = scorer.Score(phrase);
          } catch (const std::exception& e) {
            throw ScoringError(fmt::format("scorer '{}' failed on phrase {}: {}",
                                           scorer.Id(), phrase.phrase_id,
                                           e.what()));
          }
          scored.binary = ToBinaryPolarity(
              CompoundScore(phrase.normalized_text, lexicon, config), config);
          scored.agrees = Agrees(scored.fine, scored.binary.label);
        }
      });
  return out;
}

EngineAccuracy MeasureAccuracy(std::span<const LabeledText> labeled,
                               const Lexicon& lexicon,
                               const EngineConfig& config) {
  EngineAccuracy acc;
  if (labeled.empty()) return acc;
  long exact = 0;
  long near = 0;
  for (const LabeledText& item : labeled) {
    const int predicted =
        MapToFine(CompoundScore(item.normalized_text, lexicon, config), config)
            .value();
    exact += predicted == item.score;
    near += std::abs(predicted - item.score) <= 1;
  }
  const auto n = static_cast<double>(labeled.size());
  acc.exact = static_cast<double>(exact) / n;
  acc.within_one = static_cast<double>(near) / n;
  return acc;
}

}  // namespace evalsense
