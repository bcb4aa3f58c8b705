// Copyright 2026 The typlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace typlab {

/// Invalid argument, malformed matrix, partition mismatch and the like.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class IndexError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// A random draw produced a vector that cannot be normalized.
class DegenerateSample : public std::runtime_error {
  public:
    DegenerateSample() : std::runtime_error("degenerate sample") {}
};

/// An internal numerical check failed (e.g. a Hermitian expectation with a
/// large imaginary part).
class ConsistencyError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Configuration text could not be parsed. `line()` is 1-based, 0 when the
/// problem is not tied to one line.
class ConfigError : public ValidationError {
  public:
    ConfigError(int line, const std::string &message)
        : ValidationError(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

    int line() const noexcept { return line_; }

  private:
    int line_;
};

}  // namespace typlab
