#include "rackwork/ybe.hpp"

#include <string>

#include "rackwork/detail/scan.hpp"
#include "rackwork/error.hpp"

namespace rackwork {

TripleState lift(const PairMap& f, Position pos, TripleState t) noexcept {
  switch (pos) {
    case Position::p12: {
      const auto p = f(t.x, t.y);
      return {p.first, p.second, t.z};
    }
    case Position::p13: {
      const auto p = f(t.x, t.z);
      return {p.first, t.y, p.second};
    }
    case Position::p23: {
      const auto p = f(t.y, t.z);
      return {t.x, p.first, p.second};
    }
  }
  return t;
}

TripleState apply_composite(std::span<const Factor> factors, TripleState t) noexcept {
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) t = lift(*it->map, it->pos, t);
  return t;
}

AxiomReport check_triple_equation(std::string_view id, std::span<const Factor> lhs, std::span<const Factor> rhs,
                                  const ReportOptions& opt) {
  std::size_t n = 0;
  for (auto side : {lhs, rhs})
    for (const auto& f : side) {
      if (n == 0) n = f.map->size();
      if (f.map->size() != n)
        throw Error(ErrorCode::carrier_mismatch,
                    "maps on " + std::to_string(n) + " and " + std::to_string(f.map->size()) + " elements");
    }
  AxiomReport r;
  if (n == 0) return r;
  detail::scan<3>(id, n,
                  [&](const detail::Tuple<3>& t) {
                    const TripleState s{t[0], t[1], t[2]};
                    return apply_composite(lhs, s) == apply_composite(rhs, s);
                  },
                  opt.limit(), r);
  return r;
}

AxiomReport check_qybe(const PairMap& f, const ReportOptions& opt) {
  const Factor lhs[] = {{&f, Position::p12}, {&f, Position::p13}, {&f, Position::p23}};
  const Factor rhs[] = {{&f, Position::p23}, {&f, Position::p13}, {&f, Position::p12}};
  return check_triple_equation(ybe_check::qybe, lhs, rhs, opt);
}

AxiomReport check_mixed(const PairMap& a, const PairMap& b, const ReportOptions& opt) {
  const Factor lhs[] = {{&a, Position::p23}, {&a, Position::p13}, {&b, Position::p12}};
  const Factor rhs[] = {{&b, Position::p12}, {&a, Position::p13}, {&a, Position::p23}};
  return check_triple_equation(ybe_check::mixed_left, lhs, rhs, opt);
}

AxiomReport check_mixed_right(const PairMap& a, const PairMap& b, const ReportOptions& opt) {
  const Factor lhs[] = {{&a, Position::p12}, {&a, Position::p13}, {&b, Position::p23}};
  const Factor rhs[] = {{&b, Position::p23}, {&a, Position::p13}, {&a, Position::p12}};
  return check_triple_equation(ybe_check::mixed_right, lhs, rhs, opt);
}

PairMap w_map(const Structure& s) {
  return PairMap::tabulate(s.size(), [&](Element x, Element y) { return ElementPair{x, s.dot()(x, y)}; });
}

PairMap z_map(const Structure& s) {
  return PairMap::tabulate(s.size(), [&](Element x, Element y) { return ElementPair{s.diamond()(x, y), y}; });
}

SystemReport check_yb_system(const Structure& s, Element e, const ReportOptions& opt) {
  const auto x = exp_map(s, e);
  const auto w = w_map(s);
  const auto z = z_map(s);
  return SystemReport{check_qybe(w, opt), check_qybe(x, opt), check_qybe(z, opt), check_mixed(x, w, opt),
                      check_mixed_right(x, z, opt)};
}

}  // namespace rackwork
