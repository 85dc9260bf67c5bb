#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricfan {

enum class ErrorCode {
  Parse,
  InvalidParam,
  DimensionMismatch,
  ShapeMismatch,
  ZeroInput,
  ZeroForbidden,
  NotNice,
  SingularB,
  NonUnimodularV,
  InvalidFan,
  PerturbationFailed,
  RegularityFailedAtMaxN,
  UnknownGallery,
  DimensionTooLarge,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above; the
/// message is meant for humans and is not part of any stable format.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace toricfan
