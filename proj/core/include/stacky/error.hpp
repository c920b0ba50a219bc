#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stacky {

enum class ErrorCode {
  NonBijection,
  GroupTooLarge,
  BadCharacteristic,
  NotASubgroup,
  NotInNormalizer,
  NotAnAction,
  NotRational,
  NonIntegralConstant,
  OpaqueTensor,
  InconsistentAction,
  ShapeMismatch,
  NotTotal,
  NotIdempotent,
  NotEquidegree,
  NotAnAutomorphism,
  BadOrder,
  ParseError,
  ValidationError,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace stacky
