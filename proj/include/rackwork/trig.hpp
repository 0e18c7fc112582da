#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rackwork/structure.hpp"

namespace rackwork {

/// A structure with chosen base points e and O, and the derived
/// Pi = e.O and U = e.Pi.
struct TrigContext {
  Structure s;
  Element e = 0;
  Element o = 0;
  Element pi = 0;
  Element u = 0;
};

/// Throws index_out_of_range.
TrigContext make_trig_context(Structure s, Element e, Element o);

/// cos x = e x.
Element t_cos(const TrigContext& ctx, Element x);
/// sin x = x <> e.
Element t_sin(const TrigContext& ctx, Element x);

namespace trig_property {
inline constexpr std::string_view cos_pi = "cos Pi = U";
inline constexpr std::string_view sin_pi = "sin Pi = O";
inline constexpr std::string_view cos_dot = "cos(xy) = cos x cos y";
inline constexpr std::string_view cos_diamond = "cos(x<>y) = cos x <> cos y";
inline constexpr std::string_view sin_dot = "sin(xy) = sin x sin y";
inline constexpr std::string_view sin_diamond = "sin(x<>y) = sin x <> sin y";
inline constexpr std::string_view sin_cos = "sin(cos x) = x";
inline constexpr std::string_view cos_sin = "cos(sin x) = x";
inline constexpr std::string_view sin_cos_commute = "sin(cos x) = cos(sin x)";
}  // namespace trig_property

struct PropertyResult {
  std::string property;
  bool passed = true;
  std::uint64_t checked = 0;
  /// Each witness is the x (or x, y) at which the identity fails.
  std::vector<std::vector<Element>> witnesses;
  /// Listed for racks only; evaluated but not asserted on weaker structures.
  bool full_rack_only = false;
};

struct TrigReport {
  Element pi = 0;
  Element u = 0;
  std::vector<PropertyResult> properties;

  const PropertyResult& get(std::string_view property) const;
  /// All properties outside the full-rack-only section hold.
  bool passed() const noexcept;
  /// Every property holds, including the full-rack-only ones.
  bool passed_all() const noexcept;
};

/// Evaluates all nine properties. For anything but kind rack, sin Pi = O,
/// sin(cos x) = x and cos(sin x) = x are tagged full_rack_only.
TrigReport check_trig_properties(const TrigContext& ctx, const ReportOptions& opt = {});

/// ab = cos b, a<>b = sin a. Throws kind_mismatch unless ctx.s is a rack.
Structure trig_derived_rack(const TrigContext& ctx);

/// x -> cos x and x -> sin x as index maps (for check_morphism).
std::vector<Element> cos_map(const TrigContext& ctx);
std::vector<Element> sin_map(const TrigContext& ctx);

}  // namespace rackwork
