#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "srlab/semiring.hpp"

namespace srlab {

// How a yes/no answer or a computed ideal was established.
struct Verification {
  enum class Kind { exact, bounded };
  Kind kind = Kind::exact;
  std::int64_t bound = 0;

  static Verification exact() { return {}; }
  static Verification bounded(std::int64_t b) { return {Kind::bounded, b}; }

  bool is_exact() const { return kind == Kind::exact; }
  // Bounded dominates exact; the weaker (smaller) bound wins.
  Verification combine(const Verification& o) const;
  // "exact" or "bounded(B)".
  std::string str() const;

  friend bool operator==(const Verification&, const Verification&) = default;
};

struct Decision {
  bool value = false;
  Verification verification;
};

namespace detail {
struct NatMonoid;
}

struct PrincipalForm {
  Element generator;
};

// Nonzero ideal of the naturals with gcd `period` d: x is a member iff d | x
// and (x >= conductor or x/d lies in the scaled numerical monoid). The monoid
// is held through its Apery set, from which the sporadic members are derived.
// dN0 is the case conductor = 0.
struct NatPeriodicForm {
  Int period;
  Int conductor;
  std::shared_ptr<const detail::NatMonoid> monoid;

  // Members strictly between 0 and the conductor.
  std::vector<Int> sporadic() const;
  bool contains(const Int& x) const;
};

// Members of an ideal of a finite carrier, as a bitset over S.elements().
struct FiniteClosureForm {
  std::uint64_t members = 0;
};

using CanonicalForm = std::variant<PrincipalForm, NatPeriodicForm, FiniteClosureForm>;

// A finitely generated ideal, canonicalised at construction. Values are
// immutable and safe to share between threads.
class Ideal {
 public:
  const SemiringPtr& semiring() const { return ring_; }
  // Input generators, deduplicated and sorted; {0} for the zero ideal.
  const std::vector<Element>& generators() const { return gens_; }
  // A reduced generating set derived from the canonical form.
  const std::vector<Element>& basis() const { return basis_; }
  const CanonicalForm& canonical() const { return form_; }

  bool is_zero() const;
  // Generated by a single element (decided exactly from the canonical form).
  bool is_principal() const { return principal_gen_.has_value(); }
  const std::optional<Element>& principal_generator() const { return principal_gen_; }

 private:
  friend Ideal mk_ideal(const SemiringPtr& S, std::vector<Element> gens);
  Ideal() = default;

  SemiringPtr ring_;
  std::vector<Element> gens_;
  std::vector<Element> basis_;
  CanonicalForm form_;
  std::optional<Element> principal_gen_;
};

// Throws PreconditionError on an empty generator list, CarrierMismatch on a
// foreign generator, ResourceLimit if a naturals conductor is too large.
Ideal mk_ideal(const SemiringPtr& S, std::vector<Element> gens);
Ideal principal(const SemiringPtr& S, const Element& g);
Ideal zero_ideal(const SemiringPtr& S);
Ideal unit_ideal(const SemiringPtr& S);

bool contains(const Ideal& I, const Element& x);
Ideal add_ideals(const Ideal& I, const Ideal& J);
Ideal mul_ideals(const Ideal& I, const Ideal& J);
Ideal pow(const Ideal& I, unsigned e);
Ideal intersect(const Ideal& I, const Ideal& J);

struct ColonResult {
  Ideal ideal;
  Verification verification;
};
// [I : J] = { s : sJ ⊆ I }.
ColonResult colon(const Ideal& I, const Ideal& J);

bool equals(const Ideal& I, const Ideal& J);
bool is_subset(const Ideal& I, const Ideal& J);
bool operator==(const Ideal& I, const Ideal& J);

// First basis element of A outside B, else first basis element of B outside A.
std::optional<Element> separating_element(const Ideal& A, const Ideal& B);

// a + b ∈ I and a ∈ I imply b ∈ I. Exact on finite carriers (pair scan),
// naturals (only dN is subtractive), gcd-naturals and min-plus (proof rules);
// bounded scan otherwise.
Decision is_subtractive(const Ideal& I, std::int64_t bound = 12);
// The raw pair scan over probe elements, whatever the carrier.
Decision subtractive_scan(const Ideal& I, std::int64_t bound);

// Throws Unsupported on carriers without a primality rule (FId).
bool is_prime(const Ideal& I);

// All ideals of a finite carrier, ordered by size then canonical form.
std::vector<Ideal> enumerate_ideals(const SemiringPtr& S, std::size_t max_order = 8);

struct MaximalIdeals {
  std::vector<Ideal> ideals;
  bool partial = false;  // truncated spectrum (gcd-naturals with a prime bound)
};
// gcd-naturals needs prime_bound; other infinite carriers use known spectra.
MaximalIdeals maximal_ideals(const SemiringPtr& S, std::optional<Int> prime_bound = std::nullopt);
bool is_local(const SemiringPtr& S, std::optional<Int> prime_bound = std::nullopt);

// Members of an ideal of a finite carrier as a bitset over S.elements().
std::uint64_t member_mask(const Ideal& I);

std::string format(const Ideal& I);
std::string format_canonical(const Ideal& I);
// {kind, data, verification}
nlohmann::ordered_json canonical_json(const Ideal& I,
                                      const Verification& v = Verification::exact());

// Total order on canonical forms; used to sort FId elements.
std::strong_ordering compare_ideals(const Ideal& I, const Ideal& J);

}  // namespace srlab
