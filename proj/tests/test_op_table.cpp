#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "rackwork/error.hpp"
#include "rackwork/groups.hpp"
#include "rackwork/op_table.hpp"

using namespace rackwork;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::parse_error;
}

const OpTable xor_table = make_op_table(2, {0, 1, 1, 0});

}  // namespace

TEST_CASE("make_op_table validates shape and range") {
  const auto one = make_op_table(1, {0});
  CHECK(one.size() == 1);
  CHECK(apply(one, 0, 0) == 0);

  CHECK(xor_table.size() == 2);
  CHECK(code_of([] { make_op_table(2, {0, 1, 1, 2}); }) == ErrorCode::index_out_of_range);
  CHECK(code_of([] { make_op_table(2, {0, 1, 1}); }) == ErrorCode::size_mismatch);
  CHECK(code_of([] { make_op_table(0, {}); }) == ErrorCode::size_mismatch);
}

TEST_CASE("apply") {
  CHECK(apply(xor_table, 1, 1) == 0);
  CHECK(apply(xor_table, 0, 1) == 1);
  CHECK(code_of([] { apply(xor_table, 2, 0); }) == ErrorCode::index_out_of_range);
}

TEST_CASE("is_left_invertible") {
  CHECK(is_left_invertible(xor_table));
  CHECK_FALSE(is_left_invertible(make_op_table(2, {0, 0, 1, 1})));
  CHECK(is_left_invertible(make_op_table(1, {0})));
}

TEST_CASE("derive_diamond solves a . y = b") {
  // a ^ y = b gives y = a ^ b, so b <> a = a ^ b: XOR again.
  CHECK(derive_diamond(xor_table) == xor_table);

  const auto trivial = tabulate(3, [](Element, Element b) { return b; });
  const auto d = derive_diamond(trivial);
  for (Element a = 0; a < 3; ++a)
    for (Element b = 0; b < 3; ++b) CHECK(d(b, a) == b);

  CHECK(code_of([] { derive_diamond(make_op_table(2, {0, 0, 0, 1})); }) == ErrorCode::not_left_invertible);
}

TEST_CASE("derive_diamond inverts every left translation") {
  // All 4-element tables whose rows are cyclic shifts by a row-dependent amount.
  for (Element shift = 0; shift < 4; ++shift) {
    const auto dot = tabulate(4, [shift](Element a, Element b) { return (b + a * shift + 1) % 4; });
    const auto d = derive_diamond(dot);
    for (Element a = 0; a < 4; ++a)
      for (Element b = 0; b < 4; ++b) {
        CHECK(dot(a, d(b, a)) == b);
        CHECK(d(dot(a, b), a) == b);
      }
  }
}

TEST_CASE("validate_group") {
  const auto z3 = groups::cyclic(3);
  CHECK(z3.identity == 0);
  CHECK(z3.inv == std::vector<Element>{0, 2, 1});

  const auto s3 = groups::symmetric3();
  CHECK(s3.identity == 0);
  for (Element a = 0; a < 6; ++a)
    for (Element b = 0; b < 6; ++b)
      CHECK(s3.mul(a, b) == fixtures::index_of(fixtures::compose(fixtures::s3_perms[a], fixtures::s3_perms[b])));
  // (123)^-1 = (132); transpositions are involutions.
  CHECK(s3.inv == std::vector<Element>{0, 1, 2, 3, 5, 4});

  CHECK(code_of([] { validate_group(make_op_table(2, {0, 0, 0, 0})); }) == ErrorCode::no_identity);
  // Left-zero semigroup ab = a is associative with no identity.
  CHECK(code_of([] { validate_group(tabulate(2, [](Element a, Element) { return a; })); }) == ErrorCode::no_identity);
  // Subtraction mod 3 is not associative.
  CHECK(code_of([] { validate_group(tabulate(3, [](Element a, Element b) { return (a + 3 - b) % 3; })); }) ==
        ErrorCode::not_associative);
  // Monoid {0,1} under multiplication: identity 1, but 0 has no inverse.
  CHECK(code_of([] { validate_group(tabulate(2, [](Element a, Element b) { return a * b; })); }) ==
        ErrorCode::no_inverse);
}

TEST_CASE("standard groups are groups of the right order") {
  CHECK(groups::symmetric(4).order() == 24);
  CHECK(groups::dihedral(4).order() == 8);
  CHECK(groups::quaternion().order() == 8);
  // Q8 has a unique element of order 2 (index 4, i.e. -1).
  const auto q = groups::quaternion();
  int involutions = 0;
  for (Element a = 0; a < 8; ++a)
    if (a != q.identity && q.mul(a, a) == q.identity) ++involutions;
  CHECK(involutions == 1);
  // D4 has five involutions.
  const auto d = groups::dihedral(4);
  involutions = 0;
  for (Element a = 0; a < 8; ++a)
    if (a != d.identity && d.mul(a, a) == d.identity) ++involutions;
  CHECK(involutions == 5);
}
