#include "rackwork/structure.hpp"

#include <string>

#include "rackwork/detail/scan.hpp"
#include "rackwork/error.hpp"

namespace rackwork {

using detail::Tuple;
using detail::scan;

std::string_view to_string(Kind k) noexcept {
  switch (k) {
    case Kind::rack: return "rack";
    case Kind::weak_rack: return "weak_rack";
    case Kind::unchecked: return "unchecked";
  }
  return "unchecked";
}

Kind kind_from_string(std::string_view s) {
  if (s == "rack") return Kind::rack;
  if (s == "weak_rack") return Kind::weak_rack;
  if (s == "unchecked") return Kind::unchecked;
  throw Error(ErrorCode::parse_error, "unknown kind \"" + std::string(s) + "\"");
}

namespace {

void scan_left_distributive(const OpTable& dot, std::size_t limit, AxiomReport& r) {
  scan<3>(axiom::left_distributive, dot.size(),
          [&](const Tuple<3>& t) {
            const auto [a, b, c] = t;
            return dot(a, dot(b, c)) == dot(dot(a, b), dot(a, c));
          },
          limit, r);
}

void scan_right_distributive(const OpTable& dm, std::size_t limit, AxiomReport& r) {
  scan<3>(axiom::right_distributive, dm.size(),
          [&](const Tuple<3>& t) {
            const auto [a, b, c] = t;
            return dm(dm(c, b), a) == dm(dm(c, a), dm(b, a));
          },
          limit, r);
}

std::string describe_first_failure(const AxiomReport& r) {
  if (r.failures.empty()) return "no witness";
  const auto& w = r.failures.front();
  std::string s = w.axiom + " fails at (";
  for (std::size_t i = 0; i < w.tuple.size(); ++i) s += (i ? ", " : "") + std::to_string(w.tuple[i]);
  return s + ")";
}

}  // namespace

AxiomReport check_rack_axioms(const Structure& s, const ReportOptions& opt) {
  AxiomReport r;
  const auto& dot = s.dot();
  const auto& dm = s.diamond();
  const std::size_t limit = opt.limit();
  scan_left_distributive(dot, limit, r);
  scan<2>(axiom::left_cancel, s.size(),
          [&](const Tuple<2>& t) { return dm(dot(t[0], t[1]), t[0]) == t[1]; }, limit, r);
  scan<2>(axiom::right_cancel, s.size(),
          [&](const Tuple<2>& t) { return dot(t[0], dm(t[1], t[0])) == t[1]; }, limit, r);
  scan_right_distributive(dm, limit, r);
  return r;
}

AxiomReport check_weak_rack_axioms(const Structure& s, const ReportOptions& opt) {
  AxiomReport r;
  const auto& dot = s.dot();
  const auto& dm = s.diamond();
  const std::size_t limit = opt.limit();
  scan_left_distributive(dot, limit, r);
  scan<2>(axiom::compatibility, s.size(),
          [&](const Tuple<2>& t) {
            const auto [a, b] = t;
            return dm(dot(a, b), a) == dot(a, dm(b, a));
          },
          limit, r);
  scan_right_distributive(dm, limit, r);
  return r;
}

AxiomReport check_kind(const Structure& s, Kind kind, const ReportOptions& opt) {
  switch (kind) {
    case Kind::rack: return check_rack_axioms(s, opt);
    case Kind::weak_rack: return check_weak_rack_axioms(s, opt);
    case Kind::unchecked: break;
  }
  return {};
}

Structure make_structure(OpTable dot, OpTable diamond, Kind kind) {
  if (dot.size() != diamond.size())
    throw Error(ErrorCode::size_mismatch, "dot has " + std::to_string(dot.size()) + " elements, diamond " +
                                              std::to_string(diamond.size()));
  Structure s(std::move(dot), std::move(diamond), Kind::unchecked);
  if (kind != Kind::unchecked) {
    const auto report = check_kind(s, kind, {.first_only = true});
    if (!report.passed)
      throw Error(ErrorCode::verification_failed,
                  "not a " + std::string(to_string(kind)) + ": " + describe_first_failure(report));
    s.kind_ = kind;
  }
  return s;
}

Kind classify(const OpTable& dot, const OpTable& diamond) {
  const auto s = make_structure(dot, diamond, Kind::unchecked);
  if (check_rack_axioms(s, {.first_only = true}).passed) return Kind::rack;
  if (check_weak_rack_axioms(s, {.first_only = true}).passed) return Kind::weak_rack;
  return Kind::unchecked;
}

Structure conjugation_rack(const GroupTable& g) {
  const auto& m = g.mul;
  const auto& inv = g.inv;
  return make_structure(tabulate(g.order(), [&](Element a, Element b) { return m(m(a, b), inv[a]); }),
                        tabulate(g.order(), [&](Element a, Element b) { return m(m(inv[b], a), b); }),
                        Kind::rack);
}

namespace {

std::size_t boolean_carrier(unsigned atoms, const Limits& limits) {
  if (atoms >= 32 || (std::size_t{1} << atoms) > limits.max_boolean_carrier)
    throw Error(ErrorCode::carrier_too_large, "2^" + std::to_string(atoms) + " exceeds the cap of " +
                                                  std::to_string(limits.max_boolean_carrier));
  return std::size_t{1} << atoms;
}

}  // namespace

Structure boolean_weak_rack_implication(unsigned atoms, const Limits& limits) {
  const std::size_t n = boolean_carrier(atoms, limits);
  const Element mask = static_cast<Element>(n - 1);
  return make_structure(tabulate(n, [mask](Element a, Element b) { return (~a | b) & mask; }),
                        tabulate(n, [](Element a, Element b) { return a & ~b; }), Kind::weak_rack);
}

Structure boolean_weak_rack_lattice(unsigned atoms, const Limits& limits) {
  const std::size_t n = boolean_carrier(atoms, limits);
  return make_structure(tabulate(n, [](Element a, Element b) { return a | b; }),
                        tabulate(n, [](Element a, Element b) { return a & b; }), Kind::weak_rack);
}

Structure trivial_rack(std::size_t n) {
  return make_structure(tabulate(n, [](Element, Element b) { return b; }),
                        tabulate(n, [](Element a, Element) { return a; }), Kind::rack);
}

Structure dual_rack(const Structure& s) {
  const auto& dot = s.dot();
  const auto& dm = s.diamond();
  return make_structure(tabulate(s.size(), [&](Element a, Element b) { return dm(b, a); }),
                        tabulate(s.size(), [&](Element a, Element b) { return dot(b, a); }), s.kind());
}

Structure direct_product(const Structure& s1, const Structure& s2) {
  if (s1.kind() != s2.kind())
    throw Error(ErrorCode::kind_mismatch, std::string(to_string(s1.kind())) + " x " + std::string(to_string(s2.kind())));
  const std::size_t m = s2.size();
  auto componentwise = [m](const OpTable& t1, const OpTable& t2) {
    return tabulate(t1.size() * m, [&](Element p, Element q) { return t1(p / m, q / m) * m + t2(p % m, q % m); });
  };
  return make_structure(componentwise(s1.dot(), s2.dot()), componentwise(s1.diamond(), s2.diamond()), s1.kind());
}

Structure product_with_dual(const Structure& s) {
  const std::size_t n = s.size();
  const auto& dot = s.dot();
  const auto& dm = s.diamond();
  // p = (x, y), q = (u, v).
  auto box = tabulate(n * n, [&](Element p, Element q) {
    return dot(p / n, q / n) * n + dm(q % n, p % n);
  });
  auto box_diamond = tabulate(n * n, [&](Element p, Element q) {
    return dm(p / n, q / n) * n + dot(q % n, p % n);
  });
  return make_structure(std::move(box), std::move(box_diamond), s.kind());
}

AxiomReport check_morphism(std::span<const Element> f, const Structure& s1, const Structure& s2,
                           const ReportOptions& opt) {
  if (f.size() != s1.size())
    throw Error(ErrorCode::size_mismatch, "map has " + std::to_string(f.size()) + " values for a carrier of " +
                                              std::to_string(s1.size()));
  for (Element v : f)
    if (v >= s2.size()) throw Error(ErrorCode::index_out_of_range, "map value " + std::to_string(v));
  AxiomReport r;
  const auto &d1 = s1.dot(), &d2 = s2.dot(), &m1 = s1.diamond(), &m2 = s2.diamond();
  scan<2>(axiom::hom_dot, s1.size(),
          [&](const Tuple<2>& t) { return f[d1(t[0], t[1])] == d2(f[t[0]], f[t[1]]); }, opt.limit(), r);
  scan<2>(axiom::hom_diamond, s1.size(),
          [&](const Tuple<2>& t) { return f[m1(t[0], t[1])] == m2(f[t[0]], f[t[1]]); }, opt.limit(), r);
  return r;
}

std::vector<Element> diagonal_map(std::size_t n) {
  std::vector<Element> f(n);
  for (Element x = 0; x < n; ++x) f[x] = x * static_cast<Element>(n) + x;
  return f;
}

}  // namespace rackwork
