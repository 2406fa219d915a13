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

#include "cutcert/error.hpp"

namespace cutcert {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InversionOfZero: return "InversionOfZero";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::CertifyFailed: return "CertifyFailed";
    case ErrorCode::CorruptData: return "CorruptData";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::StrictViolation: return "StrictViolation";
    case ErrorCode::Io: return "Io";
    case ErrorCode::SimulationBug: return "SimulationBug";
  }
  return "Unknown";
}

}  // namespace cutcert
