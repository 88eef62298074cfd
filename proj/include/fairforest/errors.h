// Copyright 2026 The FairForest Authors.
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

#ifndef FAIRFOREST_ERRORS_H_
#define FAIRFOREST_ERRORS_H_

#include <stdexcept>
#include <string>

namespace fairforest {

// Process exit codes used by the command line tool.
enum class ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kUndefinedMetric = 3,
  kInternal = 4,
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual ExitCode exit_code() const { return ExitCode::kInputError; }
};

// Malformed tree topology: dangling child ids, cycles, wrong node kinds.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Malformed document or CSV content. Messages name the offending row/node.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Inputs that do not fit together (dimension mismatch, missing file).
class InputError : public Error {
 public:
  using Error::Error;
};

// Out-of-range options and invalid configuration files.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// API misuse, e.g. scoring leaves that were never annotated.
class UsageError : public Error {
 public:
  using Error::Error;
};

// A ratio whose denominator is an empty group or an empty dataset.
class UndefinedMetricError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::kUndefinedMetric; }
};

class InvariantError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::kInternal; }
};

}  // namespace fairforest

#endif  // FAIRFOREST_ERRORS_H_
