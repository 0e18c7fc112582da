#include "rackwork/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "rackwork/error.hpp"

namespace rackwork {

namespace {

using Flat = std::vector<Element>;

void require_size(std::size_t n, std::size_t cap, const char* what) {
  if (n < 1 || n > cap)
    throw Error(ErrorCode::carrier_too_large,
                std::string(what) + " enumeration supports 1 <= n <= " + std::to_string(cap) + ", got " +
                    std::to_string(n));
}

bool left_self_distributive(const Flat& t, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[a * n + t[b * n + c]] != t[t[a * n + b] * n + t[a * n + c]]) return false;
  return true;
}

bool right_self_distributive(const Flat& t, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[c * n + b] * n + a] != t[t[c * n + a] * n + t[b * n + a]]) return false;
  return true;
}

std::vector<Flat> all_permutations(std::size_t n) {
  std::vector<Flat> perms;
  Flat p(n);
  std::iota(p.begin(), p.end(), Element{0});
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return perms;
}

std::vector<Flat> all_tables(std::size_t n, bool (*keep)(const Flat&, std::size_t)) {
  std::vector<Flat> out;
  Flat t(n * n, 0);
  while (true) {
    if (keep(t, n)) out.push_back(t);
    std::size_t i = 0;
    while (i < t.size() && ++t[i] == n) t[i++] = 0;
    if (i == t.size()) break;
  }
  return out;
}

std::vector<Element> relabel_pair(const Flat& dot, const Flat& dm, const Flat& sigma, std::size_t n) {
  std::vector<Element> out(2 * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      out[sigma[a] * n + sigma[b]] = sigma[dot[a * n + b]];
      out[n * n + sigma[a] * n + sigma[b]] = sigma[dm[a * n + b]];
    }
  return out;
}

std::vector<Element> canonical(const Flat& dot, const Flat& dm, std::size_t n, const std::vector<Flat>& perms) {
  std::vector<Element> best;
  for (const auto& sigma : perms) {
    auto cand = relabel_pair(dot, dm, sigma, n);
    if (best.empty() || cand < best) best = std::move(cand);
  }
  return best;
}

Flat flat(const OpTable& t) { return Flat(t.entries().begin(), t.entries().end()); }

EnumResult finish(std::size_t n, std::vector<Structure> found, bool keep) {
  const auto perms = all_permutations(n);
  std::set<std::vector<Element>> classes;
  for (const auto& s : found) classes.insert(canonical(flat(s.dot()), flat(s.diamond()), n, perms));
  EnumResult r;
  r.n = n;
  r.count = found.size();
  r.classes = classes.size();
  if (keep) r.structures = std::move(found);
  return r;
}

}  // namespace

std::vector<Element> canonical_form(const OpTable& dot, const OpTable& diamond) {
  if (dot.size() != diamond.size()) throw Error(ErrorCode::size_mismatch, "canonical_form");
  return canonical(flat(dot), flat(diamond), dot.size(), all_permutations(dot.size()));
}

EnumResult enumerate_racks(std::size_t n, bool keep, const Limits& limits) {
  require_size(n, limits.max_enum_rack_n, "rack");
  const auto perms = all_permutations(n);
  const std::size_t p = perms.size();
  std::uint64_t inner = 1;
  for (std::size_t i = 1; i < n; ++i) inner *= p;

  // Partitioned by the permutation in row 0; each slice is in lexicographic
  // order of the remaining row indices.
  std::vector<std::vector<Flat>> slices(p);
  const auto first_rows = static_cast<std::int64_t>(p);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t r0 = 0; r0 < first_rows; ++r0) {
    Flat t(n * n);
    std::copy(perms[r0].begin(), perms[r0].end(), t.begin());
    for (std::uint64_t k = 0; k < inner; ++k) {
      std::uint64_t rest = k;
      for (std::size_t row = n; row-- > 1;) {
        const auto& perm = perms[rest % p];
        rest /= p;
        std::copy(perm.begin(), perm.end(), t.begin() + static_cast<std::ptrdiff_t>(row * n));
      }
      if (left_self_distributive(t, n)) slices[static_cast<std::size_t>(r0)].push_back(t);
    }
  }

  std::vector<Structure> found;
  for (auto& slice : slices)
    for (auto& t : slice) {
      auto dot = make_op_table(n, std::move(t));
      auto dm = derive_diamond(dot);
      found.push_back(make_structure(std::move(dot), std::move(dm), Kind::rack));
    }
  return finish(n, std::move(found), keep);
}

EnumResult enumerate_weak_racks(std::size_t n, bool keep, const Limits& limits) {
  require_size(n, limits.max_enum_weak_n, "weak rack");
  // Axiom 1 constrains only the dot table and axiom 3 only the diamond
  // table, so filter each independently and pair the survivors on axiom 2.
  const auto dots = all_tables(n, left_self_distributive);
  const auto diamonds = all_tables(n, right_self_distributive);

  std::vector<std::vector<std::size_t>> slices(dots.size());
  const auto rows = static_cast<std::int64_t>(dots.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < rows; ++i) {
    const auto& d = dots[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < diamonds.size(); ++j) {
      const auto& m = diamonds[j];
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a)
        for (std::size_t b = 0; b < n && ok; ++b) ok = m[d[a * n + b] * n + a] == d[a * n + m[b * n + a]];
      if (ok) slices[static_cast<std::size_t>(i)].push_back(j);
    }
  }

  std::vector<Structure> found;
  for (std::size_t i = 0; i < slices.size(); ++i)
    for (std::size_t j : slices[i])
      found.push_back(make_structure(make_op_table(n, dots[i]), make_op_table(n, diamonds[j]), Kind::weak_rack));
  return finish(n, std::move(found), keep);
}

}  // namespace rackwork
