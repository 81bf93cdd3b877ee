// Copyright 2026 The rcint Authors
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

#include "rcint/error.hpp"

namespace rcint {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::TooManyCriteria: return "TooManyCriteria";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::WrongLength: return "WrongLength";
    case ErrorCode::BadBoundary: return "BadBoundary";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::DegenerateAnchor: return "DegenerateAnchor";
    case ErrorCode::NotSeparable: return "NotSeparable";
    case ErrorCode::InvalidInterval: return "InvalidInterval";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NegativeScale: return "NegativeScale";
    case ErrorCode::OutOfScale: return "OutOfScale";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NotChainOrdered: return "NotChainOrdered";
    case ErrorCode::NegativeInput: return "NegativeInput";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace rcint
