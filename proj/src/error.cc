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

#include "locdense/error.h"

namespace locdense {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNegativeWeight: return "NegativeWeight";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kSideViolation: return "SideViolation";
    case ErrorCode::kEmptySide: return "EmptySide";
    case ErrorCode::kNegativeEntry: return "NegativeEntry";
    case ErrorCode::kNoCandidate: return "NoCandidate";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kPreconditionFailed: return "PreconditionFailed";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace locdense
