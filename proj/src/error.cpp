// Copyright 2026 The kdep Authors
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

#include "kdep/error.hpp"

namespace kdep {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::NotSubtractable: return "NotSubtractable";
    case ErrorCode::UnsupportedMonoid: return "UnsupportedMonoid";
    case ErrorCode::InvalidMonoidTable: return "InvalidMonoidTable";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownRelation: return "UnknownRelation";
    case ErrorCode::UnknownAttribute: return "UnknownAttribute";
    case ErrorCode::DuplicateAttribute: return "DuplicateAttribute";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::SchemaMismatch: return "SchemaMismatch";
    case ErrorCode::MonoidMismatch: return "MonoidMismatch";
    case ErrorCode::ReservedConstant: return "ReservedConstant";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicateIndex: return "DuplicateIndex";
    case ErrorCode::MiddleMismatch: return "MiddleMismatch";
    case ErrorCode::PremiseMismatch: return "PremiseMismatch";
    case ErrorCode::UnclassifiedMonoid: return "UnclassifiedMonoid";
    case ErrorCode::ChaseBudgetExceeded: return "ChaseBudgetExceeded";
    case ErrorCode::InvalidChain: return "InvalidChain";
    case ErrorCode::InvalidPair: return "InvalidPair";
    case ErrorCode::NotEventuallyPeriodic: return "NotEventuallyPeriodic";
    case ErrorCode::DominanceFailure: return "DominanceFailure";
    case ErrorCode::AlreadyEntailed: return "AlreadyEntailed";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace kdep
