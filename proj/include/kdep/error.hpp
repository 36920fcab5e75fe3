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

#ifndef KDEP_ERROR_HPP
#define KDEP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace kdep {

enum class ErrorCode {
  InvalidElement,
  NotSubtractable,
  UnsupportedMonoid,
  InvalidMonoidTable,
  SyntaxError,
  UnknownRelation,
  UnknownAttribute,
  DuplicateAttribute,
  ArityMismatch,
  SchemaMismatch,
  MonoidMismatch,
  ReservedConstant,
  IndexOutOfRange,
  DuplicateIndex,
  MiddleMismatch,
  PremiseMismatch,
  UnclassifiedMonoid,
  ChaseBudgetExceeded,
  InvalidChain,
  InvalidPair,
  NotEventuallyPeriodic,
  DominanceFailure,
  AlreadyEntailed,
  VerificationFailed,
  SearchSpaceTooLarge,
  InvalidInput,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// front ends (CLI exit codes, Python exceptions) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kdep

#endif  // KDEP_ERROR_HPP
