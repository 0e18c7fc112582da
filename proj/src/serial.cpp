#include "rackwork/serial.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "rackwork/error.hpp"
#include "rackwork/ybe.hpp"

namespace rackwork::serial {

namespace {

// Accumulates one axiom's tally and witnesses in visiting order.
class Recorder {
 public:
  Recorder(AxiomReport& r, std::string_view id, std::size_t limit) : r_(r), tally_{std::string(id), 0, 0}, limit_(limit) {}
  ~Recorder() {
    if (tally_.violations) r_.passed = false;
    r_.axioms.push_back(tally_);
  }
  Recorder(const Recorder&) = delete;
  Recorder& operator=(const Recorder&) = delete;

  void check(bool ok, std::vector<Element> tuple) {
    ++tally_.checked;
    if (ok) return;
    if (tally_.violations++ < limit_) r_.failures.push_back({tally_.axiom, std::move(tuple)});
  }

 private:
  AxiomReport& r_;
  AxiomTally tally_;
  std::size_t limit_;
};

void left_distributive(const Structure& s, std::size_t limit, AxiomReport& r) {
  const Element n = static_cast<Element>(s.size());
  const auto& d = s.dot();
  Recorder rec(r, axiom::left_distributive, limit);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) rec.check(d(a, d(b, c)) == d(d(a, b), d(a, c)), {a, b, c});
}

void right_distributive(const Structure& s, std::size_t limit, AxiomReport& r) {
  const Element n = static_cast<Element>(s.size());
  const auto& m = s.diamond();
  Recorder rec(r, axiom::right_distributive, limit);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) rec.check(m(m(c, b), a) == m(m(c, a), m(b, a)), {a, b, c});
}

}  // namespace

AxiomReport check_rack_axioms(const Structure& s, const ReportOptions& opt) {
  AxiomReport r;
  const Element n = static_cast<Element>(s.size());
  const auto& d = s.dot();
  const auto& m = s.diamond();
  left_distributive(s, opt.limit(), r);
  {
    Recorder rec(r, axiom::left_cancel, opt.limit());
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) rec.check(m(d(a, b), a) == b, {a, b});
  }
  {
    Recorder rec(r, axiom::right_cancel, opt.limit());
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) rec.check(d(a, m(b, a)) == b, {a, b});
  }
  right_distributive(s, opt.limit(), r);
  return r;
}

AxiomReport check_weak_rack_axioms(const Structure& s, const ReportOptions& opt) {
  AxiomReport r;
  const Element n = static_cast<Element>(s.size());
  const auto& d = s.dot();
  const auto& m = s.diamond();
  left_distributive(s, opt.limit(), r);
  {
    Recorder rec(r, axiom::compatibility, opt.limit());
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) rec.check(m(d(a, b), a) == d(a, m(b, a)), {a, b});
  }
  right_distributive(s, opt.limit(), r);
  return r;
}

AxiomReport check_exp_homomorphism(const Structure& s, Element a, const ReportOptions& opt) {
  const auto exp_a = exp_map(s, a);
  const Element n = static_cast<Element>(s.size());
  AxiomReport r;
  {
    Recorder rec(r, euler_check::exp_hom, opt.limit());
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element u = 0; u < n; ++u)
          for (Element v = 0; v < n; ++v) {
            const auto lhs = exp_a(box_apply(s, {x, y}, {u, v}));
            const auto rhs = box_apply(s, exp_a(x, y), exp_a(u, v));
            rec.check(lhs == rhs, {x, y, u, v});
          }
  }
  return r;
}

namespace {

// f applied to coordinates (i, j) of t, i < j.
void act(const PairMap& f, std::array<Element, 3>& t, int i, int j) {
  const auto p = f(t[i], t[j]);
  t[i] = p.first;
  t[j] = p.second;
}

}  // namespace

AxiomReport check_qybe(const PairMap& f, const ReportOptions& opt) {
  const Element n = static_cast<Element>(f.size());
  AxiomReport r;
  {
    Recorder rec(r, ybe_check::qybe, opt.limit());
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z) {
          std::array<Element, 3> lhs{x, y, z}, rhs{x, y, z};
          act(f, lhs, 1, 2);
          act(f, lhs, 0, 2);
          act(f, lhs, 0, 1);
          act(f, rhs, 0, 1);
          act(f, rhs, 0, 2);
          act(f, rhs, 1, 2);
          rec.check(lhs == rhs, {x, y, z});
        }
  }
  return r;
}

AxiomReport check_mixed(const PairMap& a, const PairMap& b, const ReportOptions& opt) {
  if (a.size() != b.size()) throw Error(ErrorCode::carrier_mismatch, "check_mixed");
  const Element n = static_cast<Element>(a.size());
  AxiomReport r;
  {
    Recorder rec(r, ybe_check::mixed_left, opt.limit());
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z) {
          std::array<Element, 3> lhs{x, y, z}, rhs{x, y, z};
          act(b, lhs, 0, 1);
          act(a, lhs, 0, 2);
          act(a, lhs, 1, 2);
          act(a, rhs, 1, 2);
          act(a, rhs, 0, 2);
          act(b, rhs, 0, 1);
          rec.check(lhs == rhs, {x, y, z});
        }
  }
  return r;
}

std::uint64_t count_racks(std::size_t n) {
  // Every table with permutation rows, in odometer order.
  std::vector<std::vector<Element>> perms;
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::vector<std::size_t> choice(n, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    auto dot = [&](Element a, Element b) { return perms[choice[a]][b]; };
    for (Element a = 0; a < n && ok; ++a)
      for (Element b = 0; b < n && ok; ++b)
        for (Element c = 0; c < n && ok; ++c) ok = dot(a, dot(b, c)) == dot(dot(a, b), dot(a, c));
    if (ok) ++count;
    std::size_t i = 0;
    while (i < n && ++choice[i] == perms.size()) choice[i++] = 0;
    if (i == n) break;
  }
  return count;
}

}  // namespace rackwork::serial
