// Copyright 2026 The densmod Authors. All Rights Reserved.
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

#ifndef DENSMOD_ERRORS_HPP_
#define DENSMOD_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace densmod {

/// Malformed input text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                           ": " + message),
        source_(std::move(source)),
        line_(line),
        column_(column),
        message_(message) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string source_;
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// A design that violates a structural invariant, or one the requested
/// analysis cannot handle (e.g. no edges when a density matrix is needed).
class DesignError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical result that breaks an invariant it is supposed to satisfy.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace densmod

#endif  // DENSMOD_ERRORS_HPP_
