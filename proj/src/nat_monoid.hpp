#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "srlab/integer.hpp"

namespace srlab::detail {

// A numerical monoid (cofinite submonoid of (N, +)) stored by its Apery set
// with respect to the multiplicity m: apery[r] is the least member congruent
// to r mod m, so x is a member iff x >= apery[x mod m].
struct NatMonoid {
  std::int64_t m = 1;
  std::vector<std::int64_t> apery{0};

  bool contains(std::int64_t x) const { return x >= 0 && x >= apery[static_cast<std::size_t>(x % m)]; }
  // Least c with every x >= c a member.
  std::int64_t conductor() const;
  // Members in (0, conductor).
  std::vector<std::int64_t> sporadic() const;
  std::vector<std::int64_t> minimal_generators() const;

  friend bool operator==(const NatMonoid& a, const NatMonoid& b) { return a.m == b.m && a.apery == b.apery; }
};

inline constexpr std::int64_t kMaxMultiplicity = 4'000'000;
inline constexpr std::int64_t kMaxScan = 40'000'000;

// Monoid generated by positive integers with gcd 1.
std::shared_ptr<const NatMonoid> monoid_from_generators(const std::vector<Int>& gens);

// Monoid {y : member(y)} for a predicate known to describe a numerical
// monoid; members are scanned upwards until every residue is seen.
std::shared_ptr<const NatMonoid> monoid_from_predicate(const std::function<bool(std::int64_t)>& member);

}  // namespace srlab::detail
