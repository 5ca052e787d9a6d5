#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "srlab/ideal.hpp"
#include "srlab/polynomial.hpp"
#include "srlab/rng.hpp"

namespace srlab {

// Random inputs for the suites. Sample i draws from Rng(derive_seed(seed, i)),
// so a sample does not depend on which thread runs it or on earlier samples.
struct Sampler {
  std::uint64_t seed = 42;
  std::size_t samples = 100;
  unsigned min_gens = 1;
  unsigned max_gens = 4;
  // 0 selects the carrier default: 12 on naturals, 1000 on gcd-naturals,
  // 20 per coordinate on min-plus.
  std::int64_t bound = 0;
  unsigned threads = 1;

  std::int64_t element_bound(const Semiring& S) const;
  // Zero (or bottom) turns up about once in 16 draws.
  Element element(const SemiringPtr& S, Rng& rng) const;
  Element nonzero(const SemiringPtr& S, Rng& rng) const;
  // Generator count uniform in [min_gens, max_gens]. On the integer carriers
  // half of the ideals share a common factor, so that not everything is ⟨1⟩.
  Ideal ideal(const SemiringPtr& S, Rng& rng) const;
  Ideal nonzero_ideal(const SemiringPtr& S, Rng& rng) const;
  // Degree uniform in [0, max_deg], nonzero leading coefficient.
  Polynomial polynomial(const SemiringPtr& S, Rng& rng, std::size_t max_deg) const;
};

struct LawResult {
  std::string id;
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t skipped = 0;
  // First failing instance in sample order: {sample, inputs, witness?}.
  std::optional<nlohmann::ordered_json> counterexample;
  Verification verification;
};

struct SuiteReport {
  std::string suite;
  std::string semiring;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  // pass, fail, skipped (hypothesis not met) or inconsistent (laws that must
  // agree did not, which points at a bug rather than at the carrier).
  std::string status = "pass";
  std::vector<LawResult> laws;
  std::vector<std::string> notes;
  double ms = 0;

  const LawResult& law(const std::string& id) const;
  bool all_pass() const;
  // Wall time is left out unless `timing`, so reports are byte-stable.
  nlohmann::ordered_json to_json(bool timing = false) const;
};

// One evaluated instance of a law.
struct LawCheck {
  std::string law;
  bool holds = true;
  bool skipped = false;
  std::optional<Element> witness;
  Verification verification;
};

// L1..L6 and INV (invertibility of each nonzero input) on one triple.
std::vector<LawCheck> prufer_laws(const Ideal& I, const Ideal& J, const Ideal& K);

// Requires a semidomain; PreconditionError otherwise.
SuiteReport prufer_suite(const SemiringPtr& S, const Sampler& sampler);
// C1: [IJ : I] = J for invertible I. C2: I ⊆ K, K invertible ⟹ I = K·(K⁻¹I).
SuiteReport cancellation_suite(const SemiringPtr& S, const Sampler& sampler);
// V1: ⟨a⟩ ⊆ ⟨b⟩ or ⟨b⟩ ⊆ ⟨a⟩. V2: ⟨a, b⟩ is principal. On local carriers
// the law V1<=>V2 records whether both all-pass outcomes agree.
SuiteReport valuation_check(const SemiringPtr& S, const Sampler& sampler);
// V1/V2 after localizing at each prime, plus AGREE against prufer_suite.
// gcd-naturals takes `primes` (default 2, 3, 5, 7); min-plus(k) uses its
// coordinate maximal ideals, naturals its maximal ideal ⟨2,3⟩ and a finite
// semifield its zero ideal.
SuiteReport locally_valuation_suite(const SemiringPtr& S, const std::vector<Int>& primes, const Sampler& sampler);
// G1 invertible, G2 cancellation over three J, G3 [IJ : I] = J, G4 Gaussian.
// Skipped unless S is a subtractive semidomain satisfying ab ∈ ⟨a², b²⟩ on
// the samples (law H).
SuiteReport gilmer_tsang_suite(const SemiringPtr& S, const Sampler& sampler);

// Whether every ideal of S is subtractive. Exact: full scan on finite
// carriers, proof rules on naturals, gcd-naturals, min-plus and FId over a
// Prüfer base. Unsupported otherwise.
Decision classify_subtractive(const SemiringPtr& S);

// FId(S). Finite S gives the table of its ideals (index order of
// enumerate_ideals); infinite S gives the fid carrier.
SemiringPtr build_fid(const SemiringPtr& S);
// The ideals indexing the rows of build_fid(S) for finite S.
std::vector<Ideal> fid_elements(const SemiringPtr& S);
// Wraps an ideal of S as an element of Semiring::fid(S).
Element fid_element(const Ideal& I);

// F1..F6 on build_fid(S). S must be Prüfer: known, or all-pass on
// prufer_suite; PreconditionError otherwise.
SuiteReport fid_suite(const SemiringPtr& S, const Sampler& sampler);

// First prime ideal of a finite carrier that is not subtractive.
std::optional<Ideal> non_subtractive_prime(const SemiringPtr& S);
// All prime ideals subtractive. Finite carriers only.
bool weak_gaussian_check(const SemiringPtr& S);

const std::vector<std::string>& suite_catalog();
// Runs a suite by catalog name: prufer, cancellation, valuation,
// locally-valuation, gilmer-tsang, fid.
SuiteReport run_suite(const std::string& name, const SemiringPtr& S, const Sampler& sampler);

}  // namespace srlab
