// Copyright 2026 The eduseg Authors.
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

#ifndef EDUSEG_ERRORS_HPP_
#define EDUSEG_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eduseg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input text. Carries the source name and 1-based line number
// when known (line 0 means "whole file").
class FormatError : public Error {
 public:
  FormatError(const std::string& source, std::size_t line,
              const std::string& message)
      : Error(source + ":" + std::to_string(line) + ": " + message),
        source_(source),
        line_(line) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

// A precondition of an operation was violated by otherwise well-formed
// input (length mismatch, unannotated corpus, ill-formed segmentation...).
class ContractError : public Error {
 public:
  using Error::Error;
};

}  // namespace eduseg

#endif  // EDUSEG_ERRORS_HPP_
