#pragma once

// Shared test fixtures: an independent S3 permutation oracle and the
// structure fleet used by the property tests.

#include <array>
#include <string>
#include <vector>

#include "rackwork/enumerate.hpp"
#include "rackwork/groups.hpp"
#include "rackwork/structure.hpp"
#include "rackwork/trig.hpp"

namespace fixtures {

using rackwork::Element;

// S3 as explicit permutations of {0,1,2}, in the fixed index order
// id, (12), (13), (23), (123), (132).
using Perm = std::array<int, 3>;
inline const std::array<Perm, 6> s3_perms = {{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}};

inline Perm compose(const Perm& p, const Perm& q) { return {p[q[0]], p[q[1]], p[q[2]]}; }
inline Perm inverse(const Perm& p) {
  Perm r{};
  for (int i = 0; i < 3; ++i) r[p[i]] = i;
  return r;
}
inline Element index_of(const Perm& p) {
  for (Element i = 0; i < 6; ++i)
    if (s3_perms[i] == p) return i;
  return 99;
}
/// a b a^-1 computed on permutations.
inline Element conj_dot(Element a, Element b) {
  return index_of(compose(compose(s3_perms[a], s3_perms[b]), inverse(s3_perms[a])));
}
/// b^-1 a b computed on permutations.
inline Element conj_diamond(Element a, Element b) {
  return index_of(compose(compose(inverse(s3_perms[b]), s3_perms[a]), s3_perms[b]));
}

inline rackwork::Structure conj_s3() { return rackwork::conjugation_rack(rackwork::groups::symmetric3()); }

struct Named {
  std::string name;
  rackwork::Structure s;
};

/// Racks and weak racks exercised by the property tests.
inline std::vector<Named> fleet(bool include_large = false) {
  using namespace rackwork;
  std::vector<Named> f;
  for (std::size_t n = 1; n <= 4; ++n) f.push_back({"trivial(" + std::to_string(n) + ")", trivial_rack(n)});
  f.push_back({"conj(Z3)", conjugation_rack(groups::cyclic(3))});
  f.push_back({"conj(S3)", conj_s3()});
  f.push_back({"dual(conj(S3))", dual_rack(conj_s3())});
  f.push_back({"conj(D4)", conjugation_rack(groups::dihedral(4))});
  f.push_back({"conj(Q8)", conjugation_rack(groups::quaternion())});
  f.push_back({"conj(Z2xZ2)", conjugation_rack(groups::product(groups::cyclic(2), groups::cyclic(2)))});
  f.push_back({"trig_derived(conj(S3))", trig_derived_rack(make_trig_context(conj_s3(), 1, 4))});
  f.push_back({"product_with_dual(trivial(2))", product_with_dual(trivial_rack(2))});
  f.push_back({"enumerated rack n=3 #5", enumerate_racks(3, true).structures.at(5)});
  for (unsigned k = 0; k <= 2; ++k) {
    f.push_back({"implication(" + std::to_string(k) + ")", boolean_weak_rack_implication(k)});
    f.push_back({"lattice(" + std::to_string(k) + ")", boolean_weak_rack_lattice(k)});
  }
  f.push_back({"lattice(3)", boolean_weak_rack_lattice(3)});
  f.push_back({"implication(3)", boolean_weak_rack_implication(3)});
  if (include_large) {
    f.push_back({"conj(S4)", conjugation_rack(groups::symmetric(4))});
    f.push_back({"product_with_dual(conj(S3))", product_with_dual(conj_s3())});
  }
  return f;
}

}  // namespace fixtures
