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

#ifndef EVALSENSE_EVALSENSE_HPP_
#define EVALSENSE_EVALSENSE_HPP_

#include "evalsense/errors.hpp"
#include "evalsense/eval.hpp"
#include "evalsense/ingest.hpp"
#include "evalsense/lexicon.hpp"
#include "evalsense/parser.hpp"
#include "evalsense/render.hpp"
#include "evalsense/report.hpp"
#include "evalsense/resources.hpp"
#include "evalsense/sentiment.hpp"
#include "evalsense/service.hpp"
#include "evalsense/topics.hpp"

#endif  // EVALSENSE_EVALSENSE_HPP_
