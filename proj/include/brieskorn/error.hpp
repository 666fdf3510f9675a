#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace brieskorn {

enum class ErrorCode {
  EntryTooSmall,
  TooShort,
  BudgetExceeded,
  Overflow,
  NotCommonMultiple,
  InvalidFamily,
  DimensionTooLow,
  BadParity,
  BadDimension,
  NonIntegerDegree,
  WrongFamily,
  BranchOutOfRange,
  NonIntegerResult,
  ZeroPrincipalIndex,
  EmptyInput,
  UnsupportedDimension,
  NotStandardSphere,
  MixedGroups,
  SignConditionFailed,
  DimensionMismatch,
  InvalidArgument,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace brieskorn
