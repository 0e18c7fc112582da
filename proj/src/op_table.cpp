#include "rackwork/op_table.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "rackwork/error.hpp"

namespace rackwork {

OpTable make_op_table(std::size_t n, std::vector<Element> entries) {
  if (n == 0) throw Error(ErrorCode::size_mismatch, "carrier must be non-empty");
  if (entries.size() != n * n)
    throw Error(ErrorCode::size_mismatch, "expected " + std::to_string(n * n) + " entries, got " +
                                              std::to_string(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i] >= n)
      throw Error(ErrorCode::index_out_of_range, "entry " + std::to_string(entries[i]) + " at cell " +
                                                     std::to_string(i) + " is not below " + std::to_string(n));
  return OpTable(n, std::move(entries));
}

Element OpTable::at(Element a, Element b) const {
  if (a >= n_ || b >= n_)
    throw Error(ErrorCode::index_out_of_range,
                "(" + std::to_string(a) + ", " + std::to_string(b) + ") on carrier of size " + std::to_string(n_));
  return (*this)(a, b);
}

Element apply(const OpTable& t, Element a, Element b) { return t.at(a, b); }

bool is_left_invertible(const OpTable& t) noexcept {
  const std::size_t n = t.size();
  std::vector<char> seen(n);
  for (Element a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element y : t.row(a)) {
      if (seen[y]) return false;
      seen[y] = 1;
    }
  }
  return true;
}

OpTable derive_diamond(const OpTable& dot) {
  if (!is_left_invertible(dot)) throw Error(ErrorCode::not_left_invertible, "some row is not a permutation");
  const std::size_t n = dot.size();
  std::vector<Element> d(n * n);
  // d(b, a) = y where dot(a, y) = b.
  for (Element a = 0; a < n; ++a)
    for (Element y = 0; y < n; ++y) d[dot(a, y) * n + a] = y;
  return make_op_table(n, std::move(d));
}

GroupTable validate_group(const OpTable& mul) {
  const std::size_t n = mul.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw Error(ErrorCode::not_associative, "(" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                                                      std::to_string(c) + ")");

  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool two_sided = true;
    for (Element a = 0; a < n && two_sided; ++a) two_sided = mul(e, a) == a && mul(a, e) == a;
    if (two_sided) identity = e;
  }
  if (!identity) throw Error(ErrorCode::no_identity, "no two-sided identity");

  std::vector<Element> inv(n);
  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element b = 0; b < n && !found; ++b)
      if (mul(a, b) == *identity && mul(b, a) == *identity) {
        inv[a] = b;
        found = true;
      }
    if (!found) throw Error(ErrorCode::no_inverse, "element " + std::to_string(a));
  }
  return GroupTable{mul, *identity, std::move(inv)};
}

}  // namespace rackwork
