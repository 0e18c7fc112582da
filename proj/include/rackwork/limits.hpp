#pragma once

#include <cstddef>

namespace rackwork {

/// Size caps for exhaustive work. `from_env()` lets RACKWORK_MAX_N raise
/// (never lower) the carrier caps.
struct Limits {
  std::size_t max_boolean_carrier = 256;
  std::size_t max_enum_rack_n = 4;
  std::size_t max_enum_weak_n = 3;
  unsigned max_series_level = 12;

  static Limits from_env();
};

}  // namespace rackwork
