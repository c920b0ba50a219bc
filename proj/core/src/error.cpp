#include "stacky/error.hpp"

namespace stacky {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonBijection: return "NonBijection";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::BadCharacteristic: return "BadCharacteristic";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotInNormalizer: return "NotInNormalizer";
    case ErrorCode::NotAnAction: return "NotAnAction";
    case ErrorCode::NotRational: return "NotRational";
    case ErrorCode::NonIntegralConstant: return "NonIntegralConstant";
    case ErrorCode::OpaqueTensor: return "OpaqueTensor";
    case ErrorCode::InconsistentAction: return "InconsistentAction";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotTotal: return "NotTotal";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::NotEquidegree: return "NotEquidegree";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace stacky
