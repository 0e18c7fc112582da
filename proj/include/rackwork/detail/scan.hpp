#pragma once

// Parallel exhaustive scans over Element tuples. The first coordinate is
// split across OpenMP threads; each slice keeps its own witnesses, and the
// slices are merged in index order so reports match a serial lexicographic
// scan exactly, whatever the thread count.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "rackwork/report.hpp"

namespace rackwork::detail {

template <std::size_t Rank>
using Tuple = std::array<Element, Rank>;

template <std::size_t Rank>
struct Slice {
  std::uint64_t violations = 0;
  std::vector<Tuple<Rank>> witnesses;
};

template <std::size_t Rank>
void merge_slices(std::string_view id, std::vector<Slice<Rank>>& slices, std::uint64_t checked,
                  std::size_t limit, AxiomReport& report) {
  AxiomTally tally{std::string(id), checked, 0};
  std::size_t kept = 0;
  for (auto& slice : slices) {
    tally.violations += slice.violations;
    for (const auto& w : slice.witnesses) {
      if (kept == limit) break;
      report.failures.push_back({std::string(id), std::vector<Element>(w.begin(), w.end())});
      ++kept;
    }
  }
  if (tally.violations != 0) report.passed = false;
  report.axioms.push_back(std::move(tally));
}

/// Checks holds(t) for every t in {0..n-1}^Rank and appends one tally to report.
template <std::size_t Rank, class Pred>
void scan(std::string_view id, std::size_t n, Pred&& holds, std::size_t limit, AxiomReport& report) {
  static_assert(Rank >= 1);
  std::uint64_t inner = 1;
  for (std::size_t i = 1; i < Rank; ++i) inner *= n;

  std::vector<Slice<Rank>> slices(n);
  const auto outer = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t a = 0; a < outer; ++a) {
    auto& slice = slices[static_cast<std::size_t>(a)];
    Tuple<Rank> t{};
    t[0] = static_cast<Element>(a);
    for (std::uint64_t k = 0; k < inner; ++k) {
      // Mixed-radix decode, last coordinate fastest.
      std::uint64_t rest = k;
      for (std::size_t i = Rank; i-- > 1;) {
        t[i] = static_cast<Element>(rest % n);
        rest /= n;
      }
      if (!holds(t)) {
        if (slice.witnesses.size() < limit) slice.witnesses.push_back(t);
        ++slice.violations;
      }
    }
  }
  merge_slices<Rank>(id, slices, inner * n, limit, report);
}

/// Checks holds(t) on `samples` tuples drawn uniformly from a seeded mt19937_64.
template <std::size_t Rank, class Pred>
void sample_scan(std::string_view id, std::size_t n, Pred&& holds, std::uint64_t samples,
                 std::uint64_t seed, std::size_t limit, AxiomReport& report) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  std::vector<Tuple<Rank>> tuples(samples);
  for (auto& t : tuples)
    for (auto& c : t) c = pick(rng);

  constexpr std::int64_t block = 4096;
  const auto total = static_cast<std::int64_t>(samples);
  const std::int64_t blocks = (total + block - 1) / block;
  std::vector<Slice<Rank>> slices(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    auto& slice = slices[static_cast<std::size_t>(b)];
    const std::int64_t end = std::min(total, (b + 1) * block);
    for (std::int64_t i = b * block; i < end; ++i) {
      const auto& t = tuples[static_cast<std::size_t>(i)];
      if (!holds(t)) {
        if (slice.witnesses.size() < limit) slice.witnesses.push_back(t);
        ++slice.violations;
      }
    }
  }
  merge_slices<Rank>(id, slices, samples, limit, report);
}

}  // namespace rackwork::detail
