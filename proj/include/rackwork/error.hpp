#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rackwork {

enum class ErrorCode {
  index_out_of_range,
  size_mismatch,
  not_left_invertible,
  not_associative,
  no_identity,
  no_inverse,
  carrier_too_large,
  carrier_mismatch,
  kind_mismatch,
  verification_failed,
  determinant_not_one,
  level_too_large,
  parse_error,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every library failure is an `Error`; `code()` is stable, the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rackwork
