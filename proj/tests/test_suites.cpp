#include <doctest.h>

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "srlab/error.hpp"
#include "srlab/fraction.hpp"
#include "srlab/suites.hpp"

using namespace srlab;

namespace {

Sampler sampler(std::size_t n, std::uint64_t seed = 42) {
  Sampler s;
  s.samples = n;
  s.seed = seed;
  return s;
}

const LawCheck& find(const std::vector<LawCheck>& cs, const std::string& id) {
  for (const auto& c : cs)
    if (c.law == id) return c;
  throw std::runtime_error("no law " + id);
}

// Members of a naturals ideal up to `limit`, from its generators alone.
std::set<std::int64_t> nat_set(const std::vector<std::int64_t>& gens, std::int64_t limit) {
  auto m = oracle::members_upto(oracle::nat_members(gens, limit));
  return {m.begin(), m.end()};
}

std::set<std::int64_t> meet(const std::set<std::int64_t>& a, const std::set<std::int64_t>& b) {
  std::set<std::int64_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::vector<std::int64_t> ints(const std::set<std::int64_t>& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("sampler streams are reproducible") {
  auto S = Semiring::naturals();
  Sampler sm = sampler(1);
  Rng a(derive_seed(7, 3)), b(derive_seed(7, 3));
  for (int i = 0; i < 50; ++i) CHECK(sm.ideal(S, a) == sm.ideal(S, b));
  auto F = Semiring::fid(Semiring::gcd_naturals());
  Rng c(1), d(1);
  for (int i = 0; i < 20; ++i) CHECK(F->equal(sm.element(F, c), sm.element(F, d)));
  Rng e(2);
  for (int i = 0; i < 200; ++i) {
    auto I = sm.nonzero_ideal(Semiring::gcd_naturals(), e);
    CHECK_FALSE(I.is_zero());
    CHECK(I.generators().size() <= 4);
  }
}

TEST_CASE("Prüfer laws on gcd-naturals against gcd/lcm arithmetic") {
  auto G = Semiring::gcd_naturals();
  auto lcm = [](std::int64_t a, std::int64_t b) { return a == 0 || b == 0 ? 0 : a / std::gcd(a, b) * b; };
  Rng rng(9);
  for (int t = 0; t < 300; ++t) {
    std::int64_t a = rng.between(1, 1000), b = rng.between(1, 1000), c = rng.between(1, 1000);
    // Ideals of Z: sum = gcd, intersection = lcm, product = product.
    CHECK(lcm(a, std::gcd(b, c)) == std::gcd(lcm(a, b), lcm(a, c)));
    Ideal I = principal(G, a), J = principal(G, b), K = principal(G, c);
    CHECK(intersect(I, add_ideals(J, K)) == principal(G, lcm(a, std::gcd(b, c))));
    CHECK(mul_ideals(add_ideals(I, J), intersect(I, J)) == principal(G, a * b));
    for (const auto& chk : prufer_laws(I, J, K)) {
      INFO(chk.law);
      CHECK(chk.holds);
      CHECK(chk.verification.is_exact());
    }
  }
}

TEST_CASE("Prüfer positive carriers") {
  for (const auto& S : {Semiring::gcd_naturals(), Semiring::min_plus(1), Semiring::min_plus(2), Semiring::min_plus(3)}) {
    INFO(S->id());
    auto r = prufer_suite(S, sampler(500));
    CHECK(r.status == "pass");
    for (const auto& id : {"L1", "L2", "L3", "L4", "L5", "L6", "INV"}) {
      CHECK(r.law(id).fail == 0);
      CHECK(r.law(id).verification.is_exact());
    }
    CHECK(r.law("L1").pass == 500);
    CHECK(r.law("INV").pass > 1300);
  }
}

TEST_CASE("Prüfer negative: naturals pinned witnesses") {
  auto N = Semiring::naturals();
  auto laws = prufer_laws(principal(N, 2), principal(N, 3), principal(N, 5));
  const auto& l1 = find(laws, "L1");
  CHECK_FALSE(l1.holds);
  REQUIRE(l1.witness);
  CHECK(*l1.witness == Element(8));
  // 8 ∈ ⟨2⟩ ∩ ⟨3,5⟩ but 8 ∉ ⟨6,10⟩.
  CHECK(nat_set({2}, 20).count(8));
  CHECK(nat_set({3, 5}, 20).count(8));
  CHECK_FALSE(nat_set({6, 10}, 20).count(8));

  const auto& l3 = find(laws, "L3");
  CHECK_FALSE(l3.holds);
  REQUIRE(l3.witness);
  CHECK(*l3.witness == Element(6));
  CHECK_FALSE(nat_set({12, 18}, 20).count(6));
  CHECK_FALSE(is_invertible(mk_ideal(N, {2, 3})));

  auto r = prufer_suite(N, sampler(200));
  CHECK(r.status == "fail");
  int failing = 0;
  for (const auto& id : {"L1", "L2", "L3", "L5"}) {
    INFO(id);
    CHECK(r.law(id).fail > 0);
    CHECK(r.law(id).counterexample.has_value());
  }
  for (const auto& l : r.laws) failing += l.fail > 0;
  CHECK(failing >= 2);
}

TEST_CASE("naturals L1-L3 outcomes agree with member sets") {
  auto N = Semiring::naturals();
  const std::int64_t limit = 600;
  Rng rng(77);
  auto gens = [&] {
    std::vector<std::int64_t> g;
    const int n = 1 + static_cast<int>(rng.below(2));
    for (int i = 0; i < n; ++i) g.push_back(rng.between(1, 9));
    return g;
  };
  auto products = [](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> out;
    for (auto x : a)
      for (auto y : b) out.push_back(x * y);
    return out;
  };
  auto ideal = [&](const std::vector<std::int64_t>& g) {
    std::vector<Element> e(g.begin(), g.end());
    return mk_ideal(N, e);
  };
  for (int t = 0; t < 150; ++t) {
    auto a = gens(), b = gens(), c = gens();
    auto A = nat_set(a, limit), B = nat_set(b, limit);
    std::vector<std::int64_t> bc = b;
    bc.insert(bc.end(), c.begin(), c.end());
    std::vector<std::int64_t> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    // L1: I ∩ (J + K) vs I∩J + I∩K; intersections as explicit member sets.
    auto lhs1 = meet(A, nat_set(bc, limit));
    auto ij = meet(A, B), ik = meet(A, nat_set(c, limit));
    std::vector<std::int64_t> sumgens = ints(ij);
    auto ikv = ints(ik);
    sumgens.insert(sumgens.end(), ikv.begin(), ikv.end());
    auto rhs1 = nat_set(sumgens, limit);
    // L3: (I+J)(I∩J) vs IJ.
    auto lhs3 = nat_set(products(ab, ints(ij)), limit), rhs3 = nat_set(products(a, b), limit);

    auto laws = prufer_laws(ideal(a), ideal(b), ideal(c));
    const auto& l1 = find(laws, "L1");
    const auto& l3 = find(laws, "L3");
    // Members below limit/3 are decided by the truncated sets.
    auto low = [&](const std::set<std::int64_t>& s) {
      return std::set<std::int64_t>(s.begin(), s.lower_bound(limit / 3));
    };
    CHECK(l1.holds == (low(lhs1) == low(rhs1)));
    CHECK(l3.holds == (low(lhs3) == low(rhs3)));
    if (!l1.holds) {
      const auto w = l1.witness->as_int().convert_to<std::int64_t>();
      CHECK(lhs1.count(w) != rhs1.count(w));
    }
    if (!l3.holds) {
      const auto w = l3.witness->as_int().convert_to<std::int64_t>();
      CHECK(lhs3.count(w) != rhs3.count(w));
    }
  }
}

TEST_CASE("cancellation suite") {
  auto G = Semiring::gcd_naturals();
  auto I = mk_ideal(G, {4, 6}), J = principal(G, 5);
  CHECK(colon(mul_ideals(I, J), I).ideal == J);
  CHECK(mul_ideals(I, J) == principal(G, 10));
  auto M = Semiring::min_plus(2);
  auto Im = principal(M, Element::tuple({1, 1}));
  auto Jm = mk_ideal(M, {Element::tuple({0, 2}), Element::tuple({2, 0})});
  CHECK(colon(mul_ideals(Im, Jm), Im).ideal == Jm);

  for (const auto& S : {G, M, Semiring::naturals(), Semiring::boolean()}) {
    INFO(S->id());
    auto r = cancellation_suite(S, sampler(200));
    CHECK(r.status == "pass");
    CHECK(r.law("C1").pass > 0);
  }
  // ⟨2,3⟩ is not invertible, so C1 is not asserted for it.
  CHECK_FALSE(is_invertible(mk_ideal(Semiring::naturals(), {2, 3})));
  auto lat = cancellation_suite(Semiring::divisor_lattice(30), sampler(50));
  CHECK(lat.law("C1").skipped == 50);
}

TEST_CASE("valuation check") {
  auto m1 = valuation_check(Semiring::min_plus(1), sampler(300));
  CHECK(m1.status == "pass");
  CHECK(m1.law("V1<=>V2").pass == 1);

  auto M2 = Semiring::min_plus(2);
  auto a = Element::tuple({1, 0}), b = Element::tuple({0, 1});
  CHECK_FALSE(contains(principal(M2, a), b));
  CHECK_FALSE(contains(principal(M2, b), a));
  CHECK(mk_ideal(M2, {a, b}) == principal(M2, Element::tuple({0, 0})));
  auto m2 = valuation_check(M2, sampler(300));
  CHECK(m2.law("V1").fail > 0);
  CHECK(m2.law("V2").fail == 0);
  REQUIRE(m2.notes.size() == 1);
  CHECK(m2.notes[0].find("not local") != std::string::npos);

  auto N = Semiring::naturals();
  CHECK_FALSE(contains(principal(N, 2), 3));
  CHECK_FALSE(contains(principal(N, 3), 2));
  CHECK_FALSE(mk_ideal(N, {2, 3}).is_principal());
  auto n = valuation_check(N, sampler(200));
  CHECK(n.law("V1").fail > 0);
  CHECK(n.law("V2").fail > 0);
  CHECK(n.law("V1<=>V2").pass == 1);
  CHECK_THROWS_AS(valuation_check(Semiring::divisor_lattice(6), sampler(5)), PreconditionError);
}

TEST_CASE("locally valuation suite") {
  auto g = locally_valuation_suite(Semiring::gcd_naturals(), {2, 3, 5, 7}, sampler(200));
  CHECK(g.status == "pass");
  CHECK(g.laws.size() == 9);
  CHECK(g.law("AGREE").pass == 1);
  auto m = locally_valuation_suite(Semiring::min_plus(2), {}, sampler(200));
  CHECK(m.status == "pass");
  auto n = locally_valuation_suite(Semiring::naturals(), {}, sampler(100));
  CHECK(n.status == "fail");
  CHECK(n.law("V1@<2,3>").fail > 0);
  CHECK(n.law("AGREE").pass == 1);
  CHECK(locally_valuation_suite(Semiring::boolean(), {}, sampler(50)).status == "pass");
  CHECK_THROWS_AS(locally_valuation_suite(Semiring::gcd_naturals(), {4}, sampler(5)), PreconditionError);
  CHECK_THROWS_AS(locally_valuation_suite(Semiring::fid(Semiring::gcd_naturals()), {}, sampler(5)), Unsupported);
}

TEST_CASE("Gilmer-Tsang agreement") {
  for (const auto& S : {Semiring::gcd_naturals(), Semiring::min_plus(2), Semiring::boolean()}) {
    INFO(S->id());
    auto r = gilmer_tsang_suite(S, sampler(300));
    CHECK(r.status == "pass");
    for (const auto& id : {"H", "G1", "G2", "G3", "G4"}) CHECK(r.law(id).fail == 0);
    CHECK(r.law("G4").pass == 300);
  }
  auto n = gilmer_tsang_suite(Semiring::naturals(), sampler(10));
  CHECK(n.status == "skipped");
  CHECK(n.laws.empty());
  CHECK(gilmer_tsang_suite(Semiring::divisor_lattice(30), sampler(10)).status == "skipped");
}

TEST_CASE("cross-suite consistency") {
  for (const auto& S : {Semiring::gcd_naturals(), Semiring::min_plus(1), Semiring::min_plus(3), Semiring::naturals(),
                        Semiring::boolean()}) {
    INFO(S->id());
    auto sm = sampler(150, 5);
    const bool prufer = prufer_suite(S, sm).all_pass();
    auto gt = gilmer_tsang_suite(S, sm);
    if (gt.status != "skipped") CHECK(gt.all_pass() == prufer);
    auto lv = locally_valuation_suite(S, {}, sm);
    CHECK(lv.status != "inconsistent");
    CHECK(lv.law("AGREE").pass == 1);
  }
}

TEST_CASE("subtractive classification and weak Gaussian check") {
  CHECK(classify_subtractive(Semiring::gcd_naturals()).value);
  CHECK_FALSE(classify_subtractive(Semiring::naturals()).value);
  CHECK(classify_subtractive(Semiring::boolean()).value);
  CHECK(classify_subtractive(Semiring::divisor_lattice(4)).value);
  CHECK_THROWS_AS(classify_subtractive(Semiring::fid(Semiring::naturals())), Unsupported);

  CHECK(weak_gaussian_check(Semiring::boolean()));
  auto chain = Semiring::divisor_lattice(4);
  CHECK(weak_gaussian_check(chain));
  CHECK(weak_gaussian_check(Semiring::powerset_lattice(3)));
  CHECK_THROWS_AS(weak_gaussian_check(Semiring::naturals()), Unsupported);
}

TEST_CASE("build_fid") {
  auto fb = build_fid(Semiring::boolean());
  REQUIRE(fb->elements().size() == 2);
  CHECK(to_table(*fb) == to_table(*Semiring::boolean()));

  // divisors(4) is the chain 1 < 2 < 4; its ideals are the three downsets.
  auto fc = build_fid(Semiring::divisor_lattice(4));
  CHECK(fc->elements().size() == 3);
  CHECK(verify_axioms(fc->table()).empty());

  for (const auto& S : {Semiring::divisor_lattice(30), Semiring::powerset_lattice(2), Semiring::divisor_lattice(12)}) {
    auto F = build_fid(S);
    CHECK(verify_axioms(F->table()).empty());
    CHECK(F->elements().size() == enumerate_ideals(S, 64).size());
  }

  // FId(gcd-naturals) ≅ gcd-naturals through I ↦ gcd of its generators.
  auto G = Semiring::gcd_naturals();
  auto F = build_fid(G);
  Rng rng(3);
  Sampler sm;
  for (int t = 0; t < 200; ++t) {
    auto I = sm.ideal(G, rng), J = sm.ideal(G, rng);
    REQUIRE(I.is_principal());
    const Int a = I.principal_generator()->as_int(), b = J.principal_generator()->as_int();
    auto X = fid_element(I), Y = fid_element(J);
    CHECK(F->add(X, Y).ideal() == principal(G, gcd(a, b)));
    CHECK(F->mul(X, Y).ideal() == principal(G, a * b));
  }
}

TEST_CASE("FId suite") {
  for (const auto& S : {Semiring::gcd_naturals(), Semiring::min_plus(1), Semiring::boolean()}) {
    INFO(S->id());
    auto r = fid_suite(S, sampler(200));
    CHECK(r.status == "pass");
    for (const auto& id : {"F1", "F2", "F3", "F4", "F5", "F6"}) CHECK(r.law(id).fail == 0);
    CHECK(r.law("F3").skipped == 0);
  }
  CHECK_THROWS_AS(fid_suite(Semiring::naturals(), sampler(20)), PreconditionError);

  // F1 holds on FId of any carrier.
  for (const auto& S : {Semiring::naturals(), Semiring::gcd_naturals(), Semiring::min_plus(2), Semiring::boolean(),
                        Semiring::divisor_lattice(30), Semiring::powerset_lattice(3)}) {
    INFO(S->id());
    auto F = build_fid(S);
    Sampler sm;
    Rng rng(4);
    for (int t = 0; t < 100; ++t) {
      auto X = sm.element(F, rng);
      CHECK(F->equal(F->add(X, X), X));
    }
  }
}

TEST_CASE("reports are deterministic") {
  for (const auto& name : suite_catalog()) {
    INFO(name);
    auto S = Semiring::gcd_naturals();
    auto sm = sampler(60, 11);
    auto a = run_suite(name, S, sm).to_json().dump();
    auto b = run_suite(name, S, sm).to_json().dump();
    sm.threads = 4;
    auto c = run_suite(name, S, sm).to_json().dump();
    CHECK(a == b);
    CHECK(a == c);
  }
  auto sm = sampler(80, 3);
  auto n1 = prufer_suite(Semiring::naturals(), sm).to_json();
  sm.threads = 3;
  CHECK(prufer_suite(Semiring::naturals(), sm).to_json() == n1);
  CHECK_FALSE(n1.contains("ms"));
  CHECK(prufer_suite(Semiring::naturals(), sm).to_json(true).contains("ms"));
  CHECK(n1["schema"] == 1);
  CHECK(n1["laws"][0]["id"] == "L1");
  CHECK(n1["laws"][0]["counterexample"].contains("inputs"));
  CHECK_THROWS_AS(run_suite("nope", Semiring::boolean(), sm), Error);
}
