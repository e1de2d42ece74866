// Copyright 2026 The aqec Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aqec {

enum class ErrorCode {
  DimensionMismatch,
  NotHermitian,
  NotPSD,
  BudgetExceeded,
  NotQubitCode,
  InvalidBloch,
  InvalidCode,
  InvalidChannel,
  ParamOutOfRange,
  CertificateInvalid,
  NotTP,
  OutputLeavesCode,
  PreconditionViolated,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotQubitCode: return "NotQubitCode";
    case ErrorCode::InvalidBloch: return "InvalidBloch";
    case ErrorCode::InvalidCode: return "InvalidCode";
    case ErrorCode::InvalidChannel: return "InvalidChannel";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::CertificateInvalid: return "CertificateInvalid";
    case ErrorCode::NotTP: return "NotTP";
    case ErrorCode::OutputLeavesCode: return "OutputLeavesCode";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace aqec
