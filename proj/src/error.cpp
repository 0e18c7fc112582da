#include "rackwork/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "rackwork/limits.hpp"

namespace rackwork {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::size_mismatch: return "SizeMismatch";
    case ErrorCode::not_left_invertible: return "NotLeftInvertible";
    case ErrorCode::not_associative: return "NotAssociative";
    case ErrorCode::no_identity: return "NoIdentity";
    case ErrorCode::no_inverse: return "NoInverse";
    case ErrorCode::carrier_too_large: return "CarrierTooLarge";
    case ErrorCode::carrier_mismatch: return "CarrierMismatch";
    case ErrorCode::kind_mismatch: return "KindMismatch";
    case ErrorCode::verification_failed: return "VerificationFailed";
    case ErrorCode::determinant_not_one: return "DeterminantNotOne";
    case ErrorCode::level_too_large: return "LevelTooLarge";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

Limits Limits::from_env() {
  Limits l;
  const char* raw = std::getenv("RACKWORK_MAX_N");
  if (raw == nullptr || *raw == '\0') return l;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') return l;
  const auto cap = static_cast<std::size_t>(v);
  l.max_boolean_carrier = std::max(l.max_boolean_carrier, cap);
  l.max_enum_rack_n = std::max(l.max_enum_rack_n, cap);
  l.max_enum_weak_n = std::max(l.max_enum_weak_n, cap);
  return l;
}

}  // namespace rackwork
