#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>

#include "rackwork/euler.hpp"

namespace rackwork {

struct TripleState {
  Element x = 0, y = 0, z = 0;
  friend bool operator==(const TripleState&, const TripleState&) = default;
};

/// Which two coordinates of a triple a pair map acts on.
enum class Position { p12, p13, p23 };

/// F^12(x,y,z) = (f(x,y), z); F^13 = (f1(x,z), y, f2(x,z)); F^23 = (x, f(y,z)).
TripleState lift(const PairMap& f, Position pos, TripleState t) noexcept;

/// One factor of a composite R^ij o ... acting on triples.
struct Factor {
  const PairMap* map;
  Position pos;
};

/// Applies factors as written in a composition: the rightmost factor first.
TripleState apply_composite(std::span<const Factor> factors, TripleState t) noexcept;

/// Checks lhs == rhs (both written as compositions) on all n^3 triples.
/// Throws carrier_mismatch when the maps live on different carriers.
AxiomReport check_triple_equation(std::string_view id, std::span<const Factor> lhs,
                                  std::span<const Factor> rhs, const ReportOptions& opt = {});

namespace ybe_check {
inline constexpr std::string_view qybe = "R12 R13 R23 = R23 R13 R12";
inline constexpr std::string_view mixed_left = "A23 A13 B12 = B12 A13 A23";
inline constexpr std::string_view mixed_right = "A12 A13 B23 = B23 A13 A12";
}  // namespace ybe_check

/// R^12 o R^13 o R^23 == R^23 o R^13 o R^12.
AxiomReport check_qybe(const PairMap& f, const ReportOptions& opt = {});

/// A^23 o A^13 o B^12 == B^12 o A^13 o A^23.
AxiomReport check_mixed(const PairMap& a, const PairMap& b, const ReportOptions& opt = {});
/// A^12 o A^13 o B^23 == B^23 o A^13 o A^12.
AxiomReport check_mixed_right(const PairMap& a, const PairMap& b, const ReportOptions& opt = {});

/// W(x, y) = (x, xy).
PairMap w_map(const Structure& s);
/// Z(x, y) = (x<>y, y).
PairMap z_map(const Structure& s);

/// The WXZ system built from W, X = exp_e and Z.
struct SystemReport {
  AxiomReport qybe_w;
  AxiomReport qybe_x;
  AxiomReport qybe_z;
  /// X^23 X^13 W^12 = W^12 X^13 X^23.
  AxiomReport mixed_wxx;
  /// X^12 X^13 Z^23 = Z^23 X^13 X^12.
  AxiomReport mixed_xxz;

  bool passed() const noexcept {
    return qybe_w.passed && qybe_x.passed && qybe_z.passed && mixed_wxx.passed && mixed_xxz.passed;
  }
  /// The W-side mixed equation holds but the Z-side one does not: the
  /// reconstructed equation set, not the maps, is in question.
  bool definitional_discrepancy() const noexcept { return mixed_wxx.passed && !mixed_xxz.passed; }

  /// (name, report) in a fixed order for printing.
  std::array<std::pair<std::string_view, const AxiomReport*>, 5> entries() const noexcept {
    return {{{"qybe_W", &qybe_w},
             {"qybe_X", &qybe_x},
             {"qybe_Z", &qybe_z},
             {"mixed_WXX", &mixed_wxx},
             {"mixed_XXZ", &mixed_xxz}}};
  }
};

/// Throws index_out_of_range.
SystemReport check_yb_system(const Structure& s, Element e, const ReportOptions& opt = {});

}  // namespace rackwork
