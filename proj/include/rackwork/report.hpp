#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rackwork/op_table.hpp"

namespace rackwork {

struct ReportOptions {
  /// Stop collecting after the first witness of each axiom.
  bool first_only = false;
  /// Witnesses kept per axiom.
  std::size_t cap = 32;

  std::size_t limit() const noexcept { return first_only ? 1 : cap; }
};

struct Witness {
  std::string axiom;
  std::vector<Element> tuple;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Per-axiom totals: how many tuples were examined and how many failed.
struct AxiomTally {
  std::string axiom;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;

  bool passed() const noexcept { return violations == 0; }
  friend bool operator==(const AxiomTally&, const AxiomTally&) = default;
};

/// Outcome of an exhaustive (or sampled) identity check. Failures are data.
/// Witnesses are in lexicographic tuple order within each axiom.
struct AxiomReport {
  bool passed = true;
  std::vector<AxiomTally> axioms;
  std::vector<Witness> failures;

  const AxiomTally* find(std::string_view axiom) const noexcept;
  bool passed_axiom(std::string_view axiom) const noexcept;
  std::vector<Witness> witnesses(std::string_view axiom) const;

  /// Appends another report's tallies and witnesses.
  void merge(const AxiomReport& other);

  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

}  // namespace rackwork
