#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "rackwork/limits.hpp"
#include "rackwork/op_table.hpp"
#include "rackwork/report.hpp"

namespace rackwork {

enum class Kind { rack, weak_rack, unchecked };

std::string_view to_string(Kind k) noexcept;
Kind kind_from_string(std::string_view s);

// Axiom ids used in reports.
namespace axiom {
inline constexpr std::string_view left_distributive = "a(bc)=(ab)(ac)";
inline constexpr std::string_view left_cancel = "(ab)<>a=b";
inline constexpr std::string_view right_cancel = "a(b<>a)=b";
inline constexpr std::string_view right_distributive = "(c<>b)<>a=(c<>a)<>(b<>a)";
inline constexpr std::string_view compatibility = "(ab)<>a=a(b<>a)";
inline constexpr std::string_view hom_dot = "f(ab)=f(a)f(b)";
inline constexpr std::string_view hom_diamond = "f(a<>b)=f(a)<>f(b)";
}  // namespace axiom

/// A carrier with a main operation `dot` (written ab) and `diamond` (<>).
/// Constructors verify the kind they hand out; `unchecked` carries no promise.
class Structure {
 public:
  std::size_t size() const noexcept { return dot_.size(); }
  const OpTable& dot() const noexcept { return dot_; }
  const OpTable& diamond() const noexcept { return diamond_; }
  Kind kind() const noexcept { return kind_; }

  friend bool operator==(const Structure&, const Structure&) = default;

 private:
  friend Structure make_structure(OpTable, OpTable, Kind);
  Structure(OpTable dot, OpTable diamond, Kind kind)
      : dot_(std::move(dot)), diamond_(std::move(diamond)), kind_(kind) {}

  OpTable dot_;
  OpTable diamond_;
  Kind kind_ = Kind::unchecked;
};

/// Wraps two tables; for kind rack / weak_rack the corresponding axioms are
/// checked and verification_failed is thrown on any violation.
/// Throws size_mismatch when the tables differ in size.
Structure make_structure(OpTable dot, OpTable diamond, Kind kind);

/// The strongest kind whose axioms the tables satisfy.
Kind classify(const OpTable& dot, const OpTable& diamond);

/// The four rack axioms, each over all n^3 triples or n^2 pairs.
AxiomReport check_rack_axioms(const Structure& s, const ReportOptions& opt = {});
/// The three weak-rack axioms.
AxiomReport check_weak_rack_axioms(const Structure& s, const ReportOptions& opt = {});
/// Dispatches on s.kind(); an unchecked structure yields an empty passing report.
AxiomReport check_kind(const Structure& s, Kind kind, const ReportOptions& opt = {});

/// ab = a b a^-1, a<>b = b^-1 a b.
Structure conjugation_rack(const GroupTable& g);

/// Bitmasks over k atoms: ab = a -> b, a<>b = a \ b.
Structure boolean_weak_rack_implication(unsigned atoms, const Limits& limits = {});
/// Bitmasks over k atoms: ab = a | b, a<>b = a & b.
Structure boolean_weak_rack_lattice(unsigned atoms, const Limits& limits = {});

/// ab = b, a<>b = a.
Structure trivial_rack(std::size_t n);

/// a*b = b<>a as the new main operation, a.b = b a as the new diamond.
Structure dual_rack(const Structure& s);

/// Componentwise operations on pairs indexed x * n2 + y. Throws kind_mismatch.
Structure direct_product(const Structure& s1, const Structure& s2);

/// S x S with (x,y)[](u,v) = (xu, v<>y) and diamond ((x<>u), vy).
Structure product_with_dual(const Structure& s);

/// Checks f(ab) = f(a)f(b) and f(a<>b) = f(a)<>f(b) over all pairs of s1.
/// Throws index_out_of_range / size_mismatch when f is not a map s1 -> s2.
AxiomReport check_morphism(std::span<const Element> f, const Structure& s1, const Structure& s2,
                           const ReportOptions& opt = {});

/// x -> (x, x) as an index map into a carrier of n*n pairs.
std::vector<Element> diagonal_map(std::size_t n);

}  // namespace rackwork
