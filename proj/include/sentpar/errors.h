// Copyright 2026 The Sentpar Authors.
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

#ifndef SENTPAR_ERRORS_H_
#define SENTPAR_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sentpar {

// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that should contain at least one item was empty.
class EmptyInputError : public Error {
 public:
  using Error::Error;
};

// Bracketed parse text that does not describe a well-formed tree. The offset
// is a byte offset into the input string.
class MalformedParseError : public Error {
 public:
  MalformedParseError(const std::string &what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A tree without phrase structure where one was required.
class DegenerateTreeError : public Error {
 public:
  using Error::Error;
};

// A line of a text resource could not be parsed. Line numbers are 1-based.
class LineError : public Error {
 public:
  LineError(const std::string &source, std::size_t line, const std::string &what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Well-formed line carrying a value outside the accepted vocabulary.
class FormatError : public LineError {
 public:
  using LineError::LineError;
};

// Two sequences that must be aligned record-by-record differ in length.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

class LanguageMismatchError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

// Missing or invalid configuration. The CLI maps this to exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace sentpar

#endif  // SENTPAR_ERRORS_H_
