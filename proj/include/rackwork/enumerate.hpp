#pragma once

#include <cstdint>
#include <vector>

#include "rackwork/limits.hpp"
#include "rackwork/structure.hpp"

namespace rackwork {

struct EnumResult {
  std::size_t n = 0;
  /// Labeled count: structures on the indexed carrier, isomorphic copies distinct.
  std::uint64_t count = 0;
  /// Number of isomorphism classes among them.
  std::uint64_t classes = 0;
  /// Populated when asked to keep; enumeration order.
  std::vector<Structure> structures;
};

/// All racks on {0..n-1}: rows of the dot table range over permutations,
/// left self-distributivity filters, diamond is derived and the result is
/// re-verified. Throws carrier_too_large beyond limits.max_enum_rack_n.
EnumResult enumerate_racks(std::size_t n, bool keep, const Limits& limits = {});

/// All weak racks on {0..n-1}. Throws carrier_too_large beyond limits.max_enum_weak_n.
EnumResult enumerate_weak_racks(std::size_t n, bool keep, const Limits& limits = {});

/// Canonical form of a structure under relabeling (lexicographically least
/// relabeled (dot, diamond) table pair); equal iff isomorphic.
std::vector<Element> canonical_form(const OpTable& dot, const OpTable& diamond);

}  // namespace rackwork
