// Copyright 2026 The Authors.
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

#ifndef SUBCERT_ERROR_H_
#define SUBCERT_ERROR_H_

#include <stdexcept>
#include <string>

namespace subcert {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad construction parameters, out-of-range ids, k > n and the like.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An exhaustive computation would exceed its enumeration cap.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Malformed input file. line() is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? what + " (line " + std::to_string(line) + ")"
                       : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace subcert

#endif  // SUBCERT_ERROR_H_
