#pragma once

#include <cstdint>
#include <vector>

#include "rackwork/trig.hpp"

namespace rackwork {

struct ElementPair {
  Element first = 0;
  Element second = 0;

  friend bool operator==(const ElementPair&, const ElementPair&) = default;
  friend auto operator<=>(const ElementPair&, const ElementPair&) = default;
};

/// A total map S x S -> S x S, materialized: out[x * n + y] = f(x, y).
class PairMap {
 public:
  PairMap() = default;
  /// Throws size_mismatch / index_out_of_range.
  PairMap(std::size_t n, std::vector<ElementPair> out);

  template <class F>
  static PairMap tabulate(std::size_t n, F&& f) {
    std::vector<ElementPair> out(n * n);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) out[x * n + y] = f(x, y);
    return PairMap(n, std::move(out));
  }

  std::size_t size() const noexcept { return n_; }
  std::span<const ElementPair> table() const noexcept { return out_; }
  ElementPair operator()(Element x, Element y) const noexcept { return out_[x * n_ + y]; }
  ElementPair operator()(ElementPair p) const noexcept { return (*this)(p.first, p.second); }

  friend bool operator==(const PairMap&, const PairMap&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ElementPair> out_;
};

/// (f o g)(p) = f(g(p)). Throws carrier_mismatch.
PairMap compose(const PairMap& f, const PairMap& g);
PairMap identity_pair_map(std::size_t n);
PairMap swap_pair_map(std::size_t n);

/// exp_a(x, y) = (ax, y<>a). Throws index_out_of_range.
PairMap exp_map(const Structure& s, Element a);

/// (x, y)[](u, v) = (xu, v<>y).
ElementPair box_apply(const Structure& s, ElementPair p, ElementPair q);

namespace euler_check {
inline constexpr std::string_view exp_hom = "exp_a(p[]q) = exp_a(p)[]exp_a(q)";
inline constexpr std::string_view formula = "e^(x,x) = (cos x, sin x)";
inline constexpr std::string_view identity = "e^(Pi,Pi) = (U, O)";
}  // namespace euler_check

struct SamplingOptions {
  /// Carriers up to this size are checked on all n^4 quadruples.
  std::size_t exhaustive_max_n = 8;
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 0x5eed;
};

/// exp_a is a homomorphism for []: exhaustive over (x, y, u, v) up to
/// exhaustive_max_n, seeded sampling above.
AxiomReport check_exp_homomorphism(const Structure& s, Element a, const ReportOptions& opt = {},
                                   const SamplingOptions& sampling = {});

/// cosh(x, y) = (ex, y), sinh(x, y) = (x, y<>e).
PairMap cosh_map(const TrigContext& ctx);
PairMap sinh_map(const TrigContext& ctx);

/// exp_e == cosh o sinh == sinh o cosh as tables.
bool check_hyperbolic_factorization(const TrigContext& ctx);

struct EulerReport {
  /// Tally for the formula over all x and for the identity at Pi.
  AxiomReport report;
  ElementPair identity_value;
  ElementPair identity_expected;
  /// True when the identity is informational (ctx.s is not a rack).
  bool identity_full_rack_only = false;

  bool formula_passed() const noexcept { return report.passed_axiom(euler_check::formula); }
  bool identity_passed() const noexcept { return report.passed_axiom(euler_check::identity); }
  /// The asserted part: the formula, and the identity when ctx.s is a rack.
  bool passed() const noexcept {
    return formula_passed() && (identity_full_rack_only || identity_passed());
  }
};

EulerReport check_euler_formula(const TrigContext& ctx, const ReportOptions& opt = {});

}  // namespace rackwork
