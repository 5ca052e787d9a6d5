#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "srlab/ideal.hpp"

namespace srlab {

// Dense univariate polynomial; coefficient i belongs to X^i. Trailing zero
// coefficients are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial(SemiringPtr S, std::vector<Element> coeffs);

  const SemiringPtr& semiring() const { return ring_; }
  const std::vector<Element>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Throws PreconditionError on the zero polynomial.
  std::size_t degree() const;

  // poly[c0,c1,...]
  std::string str() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_semiring(*a.ring_, *b.ring_) && a.coeffs_ == b.coeffs_;
  }

 private:
  SemiringPtr ring_;
  std::vector<Element> coeffs_;
};

Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
// Ideal generated by the coefficients; PreconditionError on the zero polynomial.
Ideal content(const Polynomial& f);

struct GaussianResult {
  bool holds = true;
  std::optional<Element> witness;  // in c(f)c(g) but not in c(fg)
};
// c(fg) = c(f)c(g). The inclusion c(fg) ⊆ c(f)c(g) is checked too and a
// failure raises InternalError.
GaussianResult gaussian_pair(const Polynomial& f, const Polynomial& g);

struct DmResult {
  bool holds = true;
  std::size_t m = 0;
  std::optional<Element> witness;  // basis element of one side missing from the other
};
// c(f)^{m+1} c(g) = c(f)^m c(fg) with m = deg g.
DmResult dm_pair(const Polynomial& f, const Polynomial& g);

// ab ∈ ⟨a², b²⟩.
bool ab_in_squares(const SemiringPtr& S, const Element& a, const Element& b);

struct SearchResult {
  bool found = false;
  std::optional<Polynomial> f;
  std::optional<Polynomial> g;
  std::optional<Element> witness;
  std::uint64_t checked_count = 0;
  std::uint64_t space = 0;  // number of pairs in the enumeration

  nlohmann::ordered_json to_json() const;
};

// Coefficients used by the searches: 0..bound on naturals and gcd-naturals,
// probe tuples on min-plus, every element of a finite carrier.
std::vector<Element> coefficient_range(const SemiringPtr& S, std::int64_t bound);

// Every polynomial of exact degree d with coefficients in `range`, in
// lexicographic order of (c0, ..., cd).
std::vector<Polynomial> polynomials_of_degree(const SemiringPtr& S, const std::vector<Element>& range, std::size_t d);

// First pair (f, g) failing the law, enumerating by total degree, then by
// degree of f, then lexicographically in f and g. The result does not depend
// on `threads`. Throws ResourceLimit when the first max_pairs pairs hold
// and the space is larger.
SearchResult gaussian_search(const SemiringPtr& S, std::size_t max_deg, std::int64_t coeff_bound, unsigned threads = 1,
                             std::uint64_t max_pairs = 50'000'000);
SearchResult dm_search(const SemiringPtr& S, std::size_t max_deg, std::int64_t coeff_bound, unsigned threads = 1,
                       std::uint64_t max_pairs = 50'000'000);

}  // namespace srlab
