// Copyright 2026 The cutcert Authors
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

#ifndef CUTCERT_ERROR_HPP
#define CUTCERT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cutcert {

enum class ErrorCode {
  InversionOfZero,
  IndexOutOfRange,
  ShapeMismatch,
  InvalidParams,
  SelfLoop,
  BudgetExceeded,
  CertifyFailed,
  CorruptData,
  ParseError,
  StrictViolation,
  Io,
  SimulationBug,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cutcert

#endif  // CUTCERT_ERROR_HPP
