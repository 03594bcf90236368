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

#ifndef EVALSENSE_ERRORS_HPP_
#define EVALSENSE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace evalsense {

// Base of every error raised by the library. Messages always name the
// offending file, row, phrase or parameter.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Structural problem in an input file (header, column count, quoting).
class FormatError : public Error {
 public:
  using Error::Error;
};

// A well-formed record carrying an out-of-range or unparsable value.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A caller passed arguments outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A pluggable scorer failed on a specific phrase.
class ScoringError : public Error {
 public:
  using Error::Error;
};

}  // namespace evalsense

#endif  // EVALSENSE_ERRORS_HPP_
