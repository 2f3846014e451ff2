// Copyright 2026 The qcsp Authors.
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

#ifndef QCSP_ERRORS_H_
#define QCSP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace qcsp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. line() is 1-based, 0 when no line applies.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A solver or operation was called outside its documented precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

// Convex combination requested for a theory not flagged convex, or a theory
// flagged convex turned out not to behave convexly on the given instance.
class ConvexityNotDeclared : public Error {
 public:
  using Error::Error;
};

// An enumeration bound (oracle variable limit, probe limits, ...) was hit.
class BoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcsp

#endif  // QCSP_ERRORS_H_
