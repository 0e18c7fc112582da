#include "rackwork/euler.hpp"

#include <string>

#include "rackwork/detail/scan.hpp"
#include "rackwork/error.hpp"

namespace rackwork {

PairMap::PairMap(std::size_t n, std::vector<ElementPair> out) : n_(n), out_(std::move(out)) {
  if (n_ == 0 || out_.size() != n_ * n_)
    throw Error(ErrorCode::size_mismatch, "pair map on " + std::to_string(n_) + " elements needs " +
                                              std::to_string(n_ * n_) + " outputs, got " + std::to_string(out_.size()));
  for (const auto& p : out_)
    if (p.first >= n_ || p.second >= n_)
      throw Error(ErrorCode::index_out_of_range,
                  "output (" + std::to_string(p.first) + ", " + std::to_string(p.second) + ")");
}

PairMap compose(const PairMap& f, const PairMap& g) {
  if (f.size() != g.size()) throw Error(ErrorCode::carrier_mismatch, "compose");
  return PairMap::tabulate(f.size(), [&](Element x, Element y) { return f(g(x, y)); });
}

PairMap identity_pair_map(std::size_t n) {
  return PairMap::tabulate(n, [](Element x, Element y) { return ElementPair{x, y}; });
}

PairMap swap_pair_map(std::size_t n) {
  return PairMap::tabulate(n, [](Element x, Element y) { return ElementPair{y, x}; });
}

PairMap exp_map(const Structure& s, Element a) {
  if (a >= s.size()) throw Error(ErrorCode::index_out_of_range, "a = " + std::to_string(a));
  return PairMap::tabulate(s.size(), [&](Element x, Element y) {
    return ElementPair{s.dot()(a, x), s.diamond()(y, a)};
  });
}

ElementPair box_apply(const Structure& s, ElementPair p, ElementPair q) {
  const auto n = s.size();
  if (p.first >= n || p.second >= n || q.first >= n || q.second >= n)
    throw Error(ErrorCode::index_out_of_range, "box operand outside the carrier");
  return {s.dot()(p.first, q.first), s.diamond()(q.second, p.second)};
}

AxiomReport check_exp_homomorphism(const Structure& s, Element a, const ReportOptions& opt,
                                   const SamplingOptions& sampling) {
  if (a >= s.size()) throw Error(ErrorCode::index_out_of_range, "a = " + std::to_string(a));
  const auto& dot = s.dot();
  const auto& dm = s.diamond();
  auto holds = [&](const detail::Tuple<4>& t) {
    const auto [x, y, u, v] = t;
    // exp_a((x,y)[](u,v)) against exp_a(x,y) [] exp_a(u,v).
    const Element l1 = dot(a, dot(x, u));
    const Element l2 = dm(dm(v, y), a);
    const Element r1 = dot(dot(a, x), dot(a, u));
    const Element r2 = dm(dm(v, a), dm(y, a));
    return l1 == r1 && l2 == r2;
  };
  AxiomReport r;
  if (s.size() <= sampling.exhaustive_max_n)
    detail::scan<4>(euler_check::exp_hom, s.size(), holds, opt.limit(), r);
  else
    detail::sample_scan<4>(euler_check::exp_hom, s.size(), holds, sampling.samples, sampling.seed, opt.limit(), r);
  return r;
}

PairMap cosh_map(const TrigContext& ctx) {
  return PairMap::tabulate(ctx.s.size(), [&](Element x, Element y) { return ElementPair{ctx.s.dot()(ctx.e, x), y}; });
}

PairMap sinh_map(const TrigContext& ctx) {
  return PairMap::tabulate(ctx.s.size(),
                           [&](Element x, Element y) { return ElementPair{x, ctx.s.diamond()(y, ctx.e)}; });
}

bool check_hyperbolic_factorization(const TrigContext& ctx) {
  const auto exp_e = exp_map(ctx.s, ctx.e);
  const auto ch = cosh_map(ctx);
  const auto sh = sinh_map(ctx);
  return compose(ch, sh) == exp_e && compose(sh, ch) == exp_e;
}

EulerReport check_euler_formula(const TrigContext& ctx, const ReportOptions& opt) {
  const auto exp_e = exp_map(ctx.s, ctx.e);
  const std::size_t n = ctx.s.size();
  EulerReport out;
  AxiomReport& r = out.report;

  AxiomTally formula{std::string(euler_check::formula), n, 0};
  for (Element x = 0; x < n; ++x) {
    if (exp_e(x, x) != ElementPair{t_cos(ctx, x), t_sin(ctx, x)}) {
      if (formula.violations < opt.limit()) r.failures.push_back({formula.axiom, {x}});
      ++formula.violations;
    }
  }
  r.axioms.push_back(formula);

  out.identity_value = exp_e(ctx.pi, ctx.pi);
  out.identity_expected = {ctx.u, ctx.o};
  out.identity_full_rack_only = ctx.s.kind() != Kind::rack;
  AxiomTally identity{std::string(euler_check::identity), 1, 0};
  if (out.identity_value != out.identity_expected) {
    identity.violations = 1;
    r.failures.push_back({identity.axiom, {ctx.pi}});
  }
  r.axioms.push_back(identity);
  r.passed = formula.passed() && identity.passed();
  return out;
}

}  // namespace rackwork
