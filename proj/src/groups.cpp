#include "rackwork/groups.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "rackwork/error.hpp"

namespace rackwork::groups {

namespace {

using Perm = std::vector<Element>;

// (p o q)(i) = p(q(i)): the right factor acts first.
Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

GroupTable from_perms(const std::vector<Perm>& elems) {
  std::map<Perm, Element> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<Element>(i));
  return validate_group(
      tabulate(elems.size(), [&](Element a, Element b) { return index.at(compose(elems[a], elems[b])); }));
}

}  // namespace

GroupTable cyclic(std::size_t n) {
  return validate_group(tabulate(n, [n](Element a, Element b) { return (a + b) % n; }));
}

GroupTable symmetric3() {
  return from_perms({{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}});
}

std::vector<std::string> symmetric3_labels() { return {"id", "(12)", "(13)", "(23)", "(123)", "(132)"}; }

GroupTable symmetric(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::size_mismatch, "S_0 is not supported");
  std::vector<Perm> elems;
  Perm p(k);
  std::iota(p.begin(), p.end(), Element{0});
  do elems.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return from_perms(elems);
}

GroupTable dihedral(std::size_t m) {
  if (m == 0) throw Error(ErrorCode::size_mismatch, "dihedral group needs m >= 1");
  // a = s^fa r^i, b = s^fb r^j, and r^i s = s r^-i.
  return validate_group(tabulate(2 * m, [m](Element a, Element b) {
    const std::size_t fa = a / m, i = a % m, fb = b / m, j = b % m;
    const std::size_t ri = fb ? (m - i) % m : i;
    return ((fa + fb) % 2) * m + (ri + j) % m;
  }));
}

GroupTable quaternion() {
  // basis 0..3 = 1, i, j, k; product of basis units as (negated, basis).
  constexpr std::array<std::array<std::pair<bool, int>, 4>, 4> unit = {{
      {{{false, 0}, {false, 1}, {false, 2}, {false, 3}}},
      {{{false, 1}, {true, 0}, {false, 3}, {true, 2}}},
      {{{false, 2}, {true, 3}, {true, 0}, {false, 1}}},
      {{{false, 3}, {false, 2}, {true, 1}, {true, 0}}},
  }};
  return validate_group(tabulate(8, [&](Element a, Element b) {
    const auto [neg, basis] = unit[a % 4][b % 4];
    const bool sign = neg ^ (a >= 4) ^ (b >= 4);
    return static_cast<Element>(basis + (sign ? 4 : 0));
  }));
}

GroupTable product(const GroupTable& g, const GroupTable& h) {
  const std::size_t m = h.order();
  return validate_group(tabulate(g.order() * m, [&](Element p, Element q) {
    return g.mul(p / m, q / m) * m + h.mul(p % m, q % m);
  }));
}

}  // namespace rackwork::groups
