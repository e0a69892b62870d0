// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricflip {

enum class ErrorCode {
  InvalidInput,
  NoSolution,
  DegenerateChain,
  NotWellFormed,
  SmoothPoint,
  NotIsolatedAction,
  NotONCForm,
  NotDelta2,
  NonIntegralA1,
  NoTermination,
  DeltaTooSmall,
  ExcludedCase,
  InvalidFP,
  InternalInvariant,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::InvalidInput: return "InvalidInput";
  case ErrorCode::NoSolution: return "NoSolution";
  case ErrorCode::DegenerateChain: return "DegenerateChain";
  case ErrorCode::NotWellFormed: return "NotWellFormed";
  case ErrorCode::SmoothPoint: return "SmoothPoint";
  case ErrorCode::NotIsolatedAction: return "NotIsolatedAction";
  case ErrorCode::NotONCForm: return "NotONCForm";
  case ErrorCode::NotDelta2: return "NotDelta2";
  case ErrorCode::NonIntegralA1: return "NonIntegralA1";
  case ErrorCode::NoTermination: return "NoTermination";
  case ErrorCode::DeltaTooSmall: return "DeltaTooSmall";
  case ErrorCode::ExcludedCase: return "ExcludedCase";
  case ErrorCode::InvalidFP: return "InvalidFP";
  case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this type; `code()`
/// is stable and machine-readable, `what()` carries the human detail.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// True for errors caused by the caller's input rather than a broken
/// internal invariant.
constexpr bool is_usage_error(ErrorCode code) {
  return code != ErrorCode::InternalInvariant &&
         code != ErrorCode::NonIntegralA1 && code != ErrorCode::NoTermination;
}

} // namespace toricflip
