#pragma once

#include <cstdint>
#include <vector>

#include "fuzztop/boundary.hpp"
#include "fuzztop/fuzzy_set.hpp"
#include "fuzztop/prng.hpp"
#include "fuzztop/search.hpp"
#include "fuzztop/topology.hpp"

namespace testsupport {

using namespace fuzztop;

inline FuzzySet fs(const CarrierPtr& c, int d, std::vector<int> nums) {
  return FuzzySet(c, d, std::move(nums));
}

// The six-open two-point space used as the golden fixture throughout.
inline FuzzyTopology golden_space() {
  CarrierPtr c = make_carrier({"a", "b"});
  std::vector<FuzzySet> opens = {fs(c, 10, {0, 0}),  fs(c, 10, {8, 4}),
                                 fs(c, 10, {3, 2}),  fs(c, 10, {3, 4}),
                                 fs(c, 10, {2, 2}),  fs(c, 10, {10, 10})};
  return FuzzyTopology::from_family(c, 10, std::move(opens));
}

inline FuzzyTopology indiscrete_point_d2() {
  CarrierPtr c = make_carrier({"a"});
  std::vector<FuzzySet> opens = {fs(c, 2, {0}), fs(c, 2, {2})};
  return FuzzyTopology::from_family(c, 2, std::move(opens));
}

inline FuzzyTopology chain_point_d10() {
  CarrierPtr c = make_carrier({"a"});
  std::vector<FuzzySet> opens = {fs(c, 10, {0}), fs(c, 10, {2}),
                                 fs(c, 10, {9}), fs(c, 10, {10})};
  return FuzzyTopology::from_family(c, 10, std::move(opens));
}

inline FuzzySet random_set(const CarrierPtr& c, int d, SplitMix64& rng) {
  std::vector<int> nums(c->size());
  for (auto& v : nums)
    v = static_cast<int>(rng.below(static_cast<std::uint64_t>(d) + 1));
  return FuzzySet(c, d, std::move(nums));
}

// Independent route for the operators under test: each one computed through
// its dual. Used as the cross-check oracle everywhere.
inline FuzzySet interior_via_duality(const FuzzyTopology& t,
                                     const FuzzySet& a) {
  return complement(closure(t, complement(a)));
}

inline FuzzySet closure_via_duality(const FuzzyTopology& t, const FuzzySet& a) {
  return complement(interior(t, complement(a)));
}

// Classical boundary of a crisp set in a crisp space, computed with plain
// bitmask set algebra — no lattice scans involved. Requires t and a crisp.
inline FuzzySet classical_boundary_crisp(const FuzzyTopology& t,
                                         const FuzzySet& a) {
  const std::size_t n = t.carrier()->size();
  auto to_mask = [&](const FuzzySet& s) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (s.nums()[i] == t.denom()) m |= 1ULL << i;
    return m;
  };
  const std::uint64_t full = n == 64 ? ~0ULL : (1ULL << n) - 1;
  std::vector<std::uint64_t> closed_masks;
  for (const auto& u : t.opens()) closed_masks.push_back(full & ~to_mask(u));
  auto classical_closure = [&](std::uint64_t s) {
    std::uint64_t acc = full;
    for (std::uint64_t c : closed_masks)
      if ((s & ~c) == 0) acc &= c;
    return acc;
  };
  std::uint64_t mask = to_mask(a);
  std::uint64_t bd = classical_closure(mask) & classical_closure(full & ~mask);
  std::vector<int> nums(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (bd & (1ULL << i)) nums[i] = t.denom();
  return FuzzySet(t.carrier(), t.denom(), std::move(nums));
}

}  // namespace testsupport
