// Copyright (c) The dcsched Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace dcsched {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Malformed trace or mapping input. Carries the 1-based line number of the
// offending line when known (0 otherwise).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Invalid topology description.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A simulation was created from a workload that fails validation.
class SetupError : public Error {
 public:
  using Error::Error;
};

// A simulation ran out of events while tasks were still queued.
class StuckError : public Error {
 public:
  using Error::Error;
};

// Metrics were requested for an incomplete or unsuitable run.
class MetricsError : public Error {
 public:
  using Error::Error;
};

}  // namespace dcsched
