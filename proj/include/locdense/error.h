// Copyright 2026 The locdense Authors.
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

#ifndef LOCDENSE_ERROR_H_
#define LOCDENSE_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace locdense {

enum class ErrorCode {
  kNegativeWeight,
  kEmptyGraph,
  kSideViolation,
  kEmptySide,
  kNegativeEntry,
  kNoCandidate,
  kUnknownVertex,
  kDomainError,
  kTooLarge,
  kNoConvergence,
  kPreconditionFailed,
  kParseError,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception. `line` is set
// only for parse errors (1-based, 0 otherwise).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0,
        std::size_t column = 0)
      : std::runtime_error(message),
        code_(code),
        line_(line),
        column_(column) {}

  ErrorCode code() const { return code_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  ErrorCode code_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace locdense

#endif  // LOCDENSE_ERROR_H_
