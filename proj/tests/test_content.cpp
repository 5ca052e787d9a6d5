#include <doctest.h>

#include "oracles.hpp"
#include "srlab/error.hpp"
#include "srlab/polynomial.hpp"

using namespace srlab;

namespace {

Polynomial P(const SemiringPtr& S, std::vector<Element> c) { return Polynomial(S, std::move(c)); }

Polynomial sample_poly(const SemiringPtr& S, Rng& rng, std::size_t max_deg, std::int64_t bound) {
  std::vector<Element> c;
  const std::size_t d = rng.below(max_deg + 1);
  for (std::size_t i = 0; i <= d; ++i) c.push_back(oracle::sample_element(*S, rng, bound));
  while (S->is_zero(c.back())) c.back() = oracle::sample_element(*S, rng, bound);
  return P(S, c);
}

}  // namespace

TEST_CASE("convolution") {
  auto N = Semiring::naturals(), G = Semiring::gcd_naturals(), B = Semiring::boolean();
  CHECK(poly_mul(P(N, {2, 3}), P(N, {3, 2})) == P(N, {6, 13, 6}));
  CHECK(poly_mul(P(G, {2, 3}), P(G, {3, 2})) == P(G, {6, 1, 6}));
  CHECK(std::gcd(4, 9) == 1);
  CHECK(poly_mul(P(B, {1, 1}), P(B, {1, 1})) == P(B, {1, 1, 1}));
  CHECK(P(N, {1, 0, 0}).degree() == 0);
  CHECK(P(N, {0, 0}).is_zero());
  CHECK(P(N, {2, 3}).str() == "poly[2,3]");
}

TEST_CASE("content") {
  auto N = Semiring::naturals(), G = Semiring::gcd_naturals();
  CHECK(content(P(N, {2, 3})) == mk_ideal(N, {2, 3}));
  CHECK(content(P(G, {6, 1, 6})) == unit_ideal(G));
  auto M = Semiring::min_plus(1);
  CHECK(content(P(M, {Element::tuple({3}), Element::tuple({5})})) == principal(M, Element::tuple({3})));
  CHECK_THROWS_AS(content(P(N, {})), PreconditionError);
}

TEST_CASE("gaussian pairs") {
  auto N = Semiring::naturals();
  auto r = gaussian_pair(P(N, {2, 3}), P(N, {3, 2}));
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(*r.witness == Element(4));
  // 6a + 13b = 4 has no solution: DP oracle.
  CHECK_FALSE(oracle::nat_members({6, 13}, 4)[4]);
  CHECK(gaussian_pair(P(Semiring::gcd_naturals(), {2, 3}), P(Semiring::gcd_naturals(), {3, 2})).holds);

  auto B = Semiring::boolean();
  Rng rng(1);
  for (int i = 0; i < 100; ++i) CHECK(gaussian_pair(sample_poly(B, rng, 3, 1), sample_poly(B, rng, 3, 1)).holds);
}

TEST_CASE("Dedekind-Mertens pairs") {
  auto B = Semiring::boolean();
  auto r = dm_pair(P(B, {1, 1}), P(B, {1, 1}));
  CHECK(r.holds);
  CHECK(r.m == 1);
  // Subtractive carriers: the formula holds for every sampled pair.
  for (const auto& S : {Semiring::gcd_naturals(), Semiring::min_plus(1), Semiring::min_plus(2), B,
                        Semiring::divisor_lattice(12), Semiring::powerset_lattice(3)}) {
    INFO(S->id());
    Rng rng(33);
    for (int i = 0; i < 150; ++i) {
      auto f = sample_poly(S, rng, 3, 9), g = sample_poly(S, rng, 3, 9);
      CHECK(dm_pair(f, g).holds);
    }
  }
}

TEST_CASE("containment c(fg) ⊆ c(f)c(g) on every carrier") {
  for (const auto& S : {Semiring::naturals(), Semiring::gcd_naturals(), Semiring::min_plus(2), Semiring::boolean(),
                        Semiring::divisor_lattice(30), Semiring::powerset_lattice(2)}) {
    Rng rng(2);
    for (int i = 0; i < 100; ++i) {
      auto f = sample_poly(S, rng, 3, 9), g = sample_poly(S, rng, 3, 9);
      auto fg = poly_mul(f, g);
      auto prod = mul_ideals(content(f), content(g));
      if (!fg.is_zero()) CHECK(is_subset(content(fg), prod));
      CHECK_NOTHROW(gaussian_pair(f, g));
    }
  }
}

TEST_CASE("idempotent carriers with (a,b) = (a+b) are Gaussian") {
  for (const auto& S : {Semiring::boolean(), Semiring::divisor_lattice(30), Semiring::powerset_lattice(3),
                        Semiring::gcd_naturals(), Semiring::min_plus(2)}) {
    INFO(S->id());
    Rng rng(71);
    bool two_gen_principal = true;
    for (int i = 0; i < 200; ++i) {
      auto a = oracle::sample_element(*S, rng, 9), b = oracle::sample_element(*S, rng, 9);
      if (!(mk_ideal(S, {a, b}) == principal(S, S->add(a, b)))) two_gen_principal = false;
    }
    REQUIRE(S->additively_idempotent());
    if (!two_gen_principal) continue;
    for (int i = 0; i < 150; ++i) CHECK(gaussian_pair(sample_poly(S, rng, 3, 9), sample_poly(S, rng, 3, 9)).holds);
  }
}

TEST_CASE("gcd-naturals: Gaussian and ab ∈ (a², b²) on samples") {
  auto G = Semiring::gcd_naturals();
  CHECK(ab_in_squares(G, 4, 6));
  CHECK(std::gcd(3 * 16, 2 * 36) == 24);
  CHECK(ab_in_squares(Semiring::boolean(), 1, 1));
  CHECK(ab_in_squares(Semiring::naturals(), 1, 2));
  CHECK_FALSE(ab_in_squares(Semiring::naturals(), 2, 3));
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    CHECK(gaussian_pair(sample_poly(G, rng, 3, 50), sample_poly(G, rng, 3, 50)).holds);
    CHECK(ab_in_squares(G, rng.between(0, 1000), rng.between(0, 1000)));
  }
}

TEST_CASE("polynomial enumeration order") {
  auto B = Semiring::boolean();
  auto r = coefficient_range(B, 0);
  auto p1 = polynomials_of_degree(B, r, 1);
  REQUIRE(p1.size() == 2);
  CHECK(p1[0] == P(B, {0, 1}));
  CHECK(p1[1] == P(B, {1, 1}));
  auto N = Semiring::naturals();
  auto p2 = polynomials_of_degree(N, coefficient_range(N, 2), 2);
  CHECK(p2.size() == 3 * 3 * 2);
  CHECK(p2.front() == P(N, {0, 0, 1}));
  CHECK(p2.back() == P(N, {2, 2, 2}));
}

TEST_CASE("searches") {
  auto N = Semiring::naturals();
  auto s = gaussian_search(N, 2, 9);
  REQUIRE(s.found);
  CHECK_FALSE(gaussian_pair(*s.f, *s.g).holds);
  CHECK_FALSE(contains(content(poly_mul(*s.f, *s.g)), *s.witness));
  // The cited pair lies in the space, so the first failure cannot come later than it.
  auto s4 = gaussian_search(N, 2, 9, 4);
  CHECK(s4.f == s.f);
  CHECK(s4.g == s.g);
  CHECK(s4.checked_count == s.checked_count);

  auto none_b = gaussian_search(Semiring::boolean(), 2, 1);
  CHECK_FALSE(none_b.found);
  CHECK(none_b.checked_count == none_b.space);

  auto dm = dm_search(N, 3, 9);
  REQUIRE(dm.found);
  CHECK_FALSE(dm_pair(*dm.f, *dm.g).holds);

  CHECK_THROWS_AS(gaussian_search(Semiring::boolean(), 3, 1, 1, 10), ResourceLimit);
  // A budget just covering the first failure is enough even though the space is larger.
  CHECK(gaussian_search(N, 3, 9, 1, s.checked_count).f == s.f);
  auto j = s.to_json();
  CHECK(j["found"] == true);
  CHECK(j.contains("checked_count"));
}

TEST_CASE("gcd-naturals search is exhaustive and empty" * doctest::timeout(300)) {
  auto G = Semiring::gcd_naturals();
  auto s = gaussian_search(G, 2, 9, 0);
  CHECK_FALSE(s.found);
  CHECK(s.checked_count == s.space);
}
