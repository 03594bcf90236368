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


#include "fixtures.hpp"

#include <filesystem>
#include <vector>

#include "evalsense/evalsense.hpp"

namespace evalsense::testing {

std::shared_ptr<const Snapshot> SampleSnapshot(unsigned threads) {
  auto snapshot = std::make_shared<Snapshot>();
  const std::vector<std::filesystem::path> inputs{EVALSENSE_SAMPLE_CORPUS_DIR};
  snapshot->dataset = LoadReviews(inputs);
  const EngineConfig cfg;
  const LexiconScorer scorer(Lexicon::Default(), cfg);
  snapshot->scored = ScorePhrases(ParseDataset(snapshot->dataset), scorer,
                                  Lexicon::Default(), cfg, threads);
  BundleOptions options;
  options.fixed_topics = DefaultFixedTopics();
  options.stopwords = DefaultStopWords();
  options.threads = threads;
  ReportMetadata meta;
  meta.date = "2026-01-01";
  meta.scorer_id = scorer.Id();
  snapshot->bundle =
      BuildBundle(snapshot->dataset, snapshot->scored, options, meta);
  return snapshot;
}

}  // namespace evalsense::testing
