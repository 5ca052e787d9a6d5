#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "srlab/ideal.hpp"

namespace srlab {

// a/b in the semifield of fractions of a semidomain; b is MC.
// Normal forms: lowest terms on naturals and gcd-naturals; on min-plus the
// pair (max(a-b,0), max(b-a,0)); x/1 on finite semifields.
class Fraction {
 public:
  // Throws PreconditionError if S is not a semidomain or b is not MC.
  Fraction(SemiringPtr S, Element num, Element den);
  static Fraction of(SemiringPtr S, Element a) {
    auto one = S->one();
    return Fraction(std::move(S), std::move(a), std::move(one));
  }

  const SemiringPtr& semiring() const { return ring_; }
  const Element& num() const { return num_; }
  const Element& den() const { return den_; }

  // The element of S this fraction equals, if any.
  std::optional<Element> as_element() const;
  bool is_unit() const;

  std::string str() const;

 private:
  SemiringPtr ring_;
  Element num_;
  Element den_;
};

Fraction frac_add(const Fraction& x, const Fraction& y);
Fraction frac_mul(const Fraction& x, const Fraction& y);
// ad = bc.
bool frac_eq(const Fraction& x, const Fraction& y);
// Throws PreconditionError unless x is MC, i.e. its numerator is.
Fraction frac_inverse(const Fraction& x);

// (1/d)·I with d MC.
class FractionalIdeal {
 public:
  FractionalIdeal(Ideal num, Element den);
  static FractionalIdeal of(const Ideal& I) { return FractionalIdeal(I, I.semiring()->one()); }

  const SemiringPtr& semiring() const { return num_.semiring(); }
  const Ideal& num() const { return num_; }
  const Element& den() const { return den_; }

  // Generators as fractions b/d for b in the numerator basis.
  std::vector<Fraction> generators() const;
  // The ideal of S this equals, when it lies inside S.
  std::optional<Ideal> as_integral() const;

  std::string str() const;
  nlohmann::ordered_json to_json() const;

 private:
  Ideal num_;
  Element den_;
};

FractionalIdeal frac_ideal_mul(const FractionalIdeal& A, const FractionalIdeal& B);
FractionalIdeal frac_ideal_add(const FractionalIdeal& A, const FractionalIdeal& B);
// d'·I = d·I'.
bool frac_ideal_eq(const FractionalIdeal& A, const FractionalIdeal& B);
// A equals S itself.
bool is_whole(const FractionalIdeal& A);

// Largest J with J·I ⊆ S, for nonzero principal ideals over a semidomain:
// ⟨g⟩ gives (⟨1⟩, g). Throws Unsupported for non-principal ideals.
FractionalIdeal inverse_candidate(const Ideal& I);
// Throws PreconditionError on the zero ideal or a non-semidomain carrier.
bool is_invertible(const Ideal& I);

// For I·J = S over a local semidomain: the first input generator s_i such
// that s_i·t_j is a unit for some generator t_j of J. The result generates I.
Element extract_generator_local(const Ideal& I, const FractionalIdeal& J);

struct SemilocalTrace {
  Element generator;
  std::vector<Element> u;          // u_i ∈ (∩_{j≠i} m_j) \ m_i
  std::vector<Element> a;          // a_i ∈ I with a_i·b ∉ m_i
  Fraction v;                      // Σ u_i·b_i
};
// min-plus(k) only: the u/v construction over the k coordinate maximal ideals.
SemilocalTrace extract_generator_semilocal(const Ideal& I);

// Localization at a prime P. gcd-naturals at ⟨p⟩ and min-plus(k) at its
// i-th coordinate ideal land in min-plus(1) through the valuation; naturals
// at ⟨2,3⟩ and finite semifields at {0} are already local and return I.
Ideal localize_ideal(const Ideal& I, const Ideal& P);

// I_P principal for each P. On gcd-naturals every prime dividing the gcd
// of I must be listed (PreconditionError otherwise).
bool locally_principal_check(const Ideal& I, const std::vector<Ideal>& primes);

}  // namespace srlab
