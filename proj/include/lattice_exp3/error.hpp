// Copyright 2026 The lattice-exp3 Authors
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
#include <string_view>

namespace lattice_exp3 {

enum class ErrorCode {
  kNonFinite,
  kDegenerateInput,
  kCollinearVertices,
  kZeroVector,
  kEmptyInput,
  kNotDistinct,
  kObtuseTriangle,
  kInvalidDegenerate,
  kOutOfRange,
  kBothZero,
  kPoleHit,
  kTooManyCrossings,
  kNoGenericDirection,
  kNonKnotDiagram,
  kInvalidPolyline,
  kInvalidArgument,
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map them to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
    case ErrorCode::kCollinearVertices: return "CollinearVertices";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kNotDistinct: return "NotDistinct";
    case ErrorCode::kObtuseTriangle: return "ObtuseTriangle";
    case ErrorCode::kInvalidDegenerate: return "InvalidDegenerate";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kBothZero: return "BothZero";
    case ErrorCode::kPoleHit: return "PoleHit";
    case ErrorCode::kTooManyCrossings: return "TooManyCrossings";
    case ErrorCode::kNoGenericDirection: return "NoGenericDirection";
    case ErrorCode::kNonKnotDiagram: return "NonKnotDiagram";
    case ErrorCode::kInvalidPolyline: return "InvalidPolyline";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace lattice_exp3
