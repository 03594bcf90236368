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


// Shared builders for tests that need a scored corpus.
#ifndef EVALSENSE_TESTS_FIXTURES_HPP_
#define EVALSENSE_TESTS_FIXTURES_HPP_

#include <memory>

#include "evalsense/service.hpp"

namespace evalsense::testing {

// Loads, parses and scores the bundled sample corpus with the default
// lexicon engine and default topics.
std::shared_ptr<const Snapshot> SampleSnapshot(unsigned threads = 1);

}  // namespace evalsense::testing

#endif  // EVALSENSE_TESTS_FIXTURES_HPP_
