#include "toricfan/error.hpp"

namespace toricfan {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InvalidParam: return "InvalidParam";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::ZeroForbidden: return "ZeroForbidden";
    case ErrorCode::NotNice: return "NotNice";
    case ErrorCode::SingularB: return "SingularB";
    case ErrorCode::NonUnimodularV: return "NonUnimodularV";
    case ErrorCode::InvalidFan: return "InvalidFan";
    case ErrorCode::PerturbationFailed: return "PerturbationFailed";
    case ErrorCode::RegularityFailedAtMaxN: return "RegularityFailedAtMaxN";
    case ErrorCode::UnknownGallery: return "UnknownGallery";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace toricfan
