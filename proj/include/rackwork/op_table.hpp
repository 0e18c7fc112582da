#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rackwork {

/// Elements of a finite carrier are dense indices 0..n-1.
using Element = std::uint32_t;

/// A binary operation on {0, ..., n-1}, stored row-major: entry (a, b) is a op b.
class OpTable {
 public:
  OpTable() = default;

  std::size_t size() const noexcept { return n_; }
  std::span<const Element> entries() const noexcept { return entries_; }
  std::span<const Element> row(Element a) const noexcept {
    return std::span<const Element>(entries_).subspan(a * n_, n_);
  }

  /// Unchecked lookup for hot loops; callers guarantee a, b < size().
  Element operator()(Element a, Element b) const noexcept { return entries_[a * n_ + b]; }

  /// Bounds-checked lookup.
  Element at(Element a, Element b) const;

  friend bool operator==(const OpTable&, const OpTable&) = default;

 private:
  friend OpTable make_op_table(std::size_t n, std::vector<Element> entries);
  OpTable(std::size_t n, std::vector<Element> entries) : n_(n), entries_(std::move(entries)) {}

  std::size_t n_ = 0;
  std::vector<Element> entries_;
};

/// Validates and wraps a flat row-major table over n elements.
/// Throws size_mismatch if entries.size() != n*n, index_out_of_range for an entry >= n.
OpTable make_op_table(std::size_t n, std::vector<Element> entries);

/// Builds a table from a generator f(a, b).
template <class F>
OpTable tabulate(std::size_t n, F&& f) {
  std::vector<Element> entries(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      entries[a * n + b] = static_cast<Element>(f(static_cast<Element>(a), static_cast<Element>(b)));
  return make_op_table(n, std::move(entries));
}

Element apply(const OpTable& t, Element a, Element b);

/// True iff every left translation x -> a.x is a bijection.
bool is_left_invertible(const OpTable& t) noexcept;

/// The table d with a . d(b, a) = b, i.e. b <> a is the unique y with a . y = b.
/// Throws not_left_invertible.
OpTable derive_diamond(const OpTable& dot);

struct GroupTable {
  OpTable mul;
  Element identity = 0;
  std::vector<Element> inv;

  std::size_t order() const noexcept { return mul.size(); }
};

/// Finds identity and inverses and checks associativity over all n^3 triples.
/// Throws not_associative (first triple in lexicographic order), no_identity, no_inverse.
GroupTable validate_group(const OpTable& mul);

}  // namespace rackwork
