#include "srlab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "srlab/error.hpp"
#include "srlab/fraction.hpp"
#include "srlab/parallel.hpp"

namespace srlab {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------- sampler

std::int64_t Sampler::element_bound(const Semiring& S) const {
  if (bound > 0) return bound;
  switch (S.carrier()) {
    case Carrier::naturals: return 12;
    case Carrier::gcd_naturals: return 1000;
    case Carrier::min_plus: return 20;
    case Carrier::fid: return element_bound(*S.base());
    default: return 0;
  }
}

Element Sampler::element(const SemiringPtr& S, Rng& rng) const {
  const std::int64_t B = element_bound(*S);
  switch (S->carrier()) {
    case Carrier::naturals:
    case Carrier::gcd_naturals:
      if (rng.one_in(16)) return 0;
      return rng.between(1, B);
    case Carrier::min_plus: {
      if (rng.one_in(16)) return Element::bottom();
      Coords c;
      for (unsigned i = 0; i < S->dimension(); ++i) c.emplace_back(rng.between(0, B));
      return c;
    }
    case Carrier::fid: {
      if (rng.one_in(16)) return S->zero();
      Sampler inner = *this;
      inner.min_gens = 1;
      inner.max_gens = 2;
      return fid_element(inner.ideal(S->base(), rng));
    }
    default: {
      const auto& el = S->elements();
      return el[rng.below(el.size())];
    }
  }
}

Element Sampler::nonzero(const SemiringPtr& S, Rng& rng) const {
  for (;;) {
    Element x = element(S, rng);
    if (!S->is_zero(x)) return x;
  }
}

Ideal Sampler::ideal(const SemiringPtr& S, Rng& rng) const {
  const auto n = static_cast<unsigned>(rng.between(min_gens, std::max(min_gens, max_gens)));
  std::vector<Element> gens;
  const bool integer = S->carrier() == Carrier::naturals || S->carrier() == Carrier::gcd_naturals;
  if (integer && rng.one_in(2)) {
    const std::int64_t B = element_bound(*S);
    const std::int64_t d = rng.between(2, std::max<std::int64_t>(2, std::min<std::int64_t>(12, B)));
    for (unsigned i = 0; i < n; ++i)
      gens.emplace_back(rng.one_in(16) ? 0 : d * rng.between(1, std::max<std::int64_t>(1, B / d)));
  } else {
    for (unsigned i = 0; i < n; ++i) gens.push_back(element(S, rng));
  }
  return mk_ideal(S, std::move(gens));
}

Ideal Sampler::nonzero_ideal(const SemiringPtr& S, Rng& rng) const {
  for (;;) {
    Ideal I = ideal(S, rng);
    if (!I.is_zero()) return I;
  }
}

Polynomial Sampler::polynomial(const SemiringPtr& S, Rng& rng, std::size_t max_deg) const {
  const std::size_t d = rng.below(max_deg + 1);
  std::vector<Element> c;
  for (std::size_t i = 0; i < d; ++i) c.push_back(element(S, rng));
  c.push_back(nonzero(S, rng));
  return Polynomial(S, std::move(c));
}

// ---------------------------------------------------------------- reports

const LawResult& SuiteReport::law(const std::string& id) const {
  for (const auto& l : laws)
    if (l.id == id) return l;
  throw Error("report " + suite + " has no law " + id);
}

bool SuiteReport::all_pass() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.fail == 0; });
}

json SuiteReport::to_json(bool timing) const {
  json j;
  j["schema"] = 1;
  j["suite"] = suite;
  j["semiring"] = semiring;
  j["seed"] = seed;
  j["samples"] = samples;
  j["status"] = status;
  j["laws"] = json::array();
  for (const auto& l : laws) {
    json x;
    x["id"] = l.id;
    x["pass"] = l.pass;
    x["fail"] = l.fail;
    x["skipped"] = l.skipped;
    if (l.counterexample) x["counterexample"] = *l.counterexample;
    x["verification"] = l.verification.str();
    j["laws"].push_back(std::move(x));
  }
  if (!notes.empty()) j["notes"] = notes;
  if (timing) j["ms"] = ms;
  return j;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Record {
  std::string law;
  bool holds = true;
  bool skipped = false;
  Verification verification;
  json payload;  // inputs and witness, filled on failure only
};

class Out {
 public:
  void skip(const std::string& law) { recs_.push_back({law, true, true, {}, {}}); }

  template <class Payload>
  void check(const std::string& law, bool holds, const Verification& v, Payload&& payload) {
    Record r{law, holds, false, v, {}};
    if (!holds) r.payload = payload();
    recs_.push_back(std::move(r));
  }

  std::vector<Record>& records() { return recs_; }

 private:
  std::vector<Record> recs_;
};

using Body = std::function<void(Rng&, Out&)>;

SuiteReport new_report(const std::string& suite, const SemiringPtr& S, const Sampler& sm) {
  SuiteReport r;
  r.suite = suite;
  r.semiring = S->id();
  r.seed = sm.seed;
  r.samples = sm.samples;
  return r;
}

LawResult& law_slot(SuiteReport& r, const std::string& id) {
  for (auto& l : r.laws)
    if (l.id == id) return l;
  r.laws.push_back({});
  r.laws.back().id = id;
  return r.laws.back();
}

// Runs body on every sample (possibly in parallel) and folds the records in
// sample order, so counts and first counterexamples match a serial run.
void run_samples(SuiteReport& r, const Sampler& sm, const std::vector<std::string>& ids, const Body& body) {
  for (const auto& id : ids) law_slot(r, id);
  std::vector<Out> outs(sm.samples);
  parallel_for(sm.samples, sm.threads, [&](std::size_t i) {
    Rng rng(derive_seed(sm.seed, i));
    body(rng, outs[i]);
  });
  for (std::size_t i = 0; i < outs.size(); ++i) {
    for (auto& rec : outs[i].records()) {
      auto& l = law_slot(r, rec.law);
      if (rec.skipped) {
        ++l.skipped;
        continue;
      }
      l.verification = l.verification.combine(rec.verification);
      if (rec.holds) {
        ++l.pass;
        continue;
      }
      ++l.fail;
      if (!l.counterexample) {
        json c;
        c["sample"] = i;
        for (auto& [k, v] : rec.payload.items()) c[k] = v;
        l.counterexample = std::move(c);
      }
    }
  }
  r.status = r.all_pass() ? "pass" : "fail";
}

void require_semidomain(const SemiringPtr& S, const char* what) {
  if (!S->flags().semidomain) throw PreconditionError(std::string(what) + " needs a semidomain, got " + S->id());
  if (!S->flags().membership_exact)
    throw PreconditionError(std::string(what) + " needs exact ideal membership, got " + S->id());
}

LawCheck eq_law(const std::string& id, const Ideal& a, const Ideal& b, Verification v = Verification::exact()) {
  auto sep = separating_element(a, b);
  return {id, !sep, false, sep, v};
}

json ideals_json(std::initializer_list<std::pair<const char*, const Ideal*>> xs) {
  json j;
  for (const auto& [k, I] : xs) j[k] = format(*I);
  return j;
}

// Payload for a failed check: inputs plus the witness, if any.
json payload(json inputs, const SemiringPtr& S, const std::optional<Element>& w) {
  json p;
  p["inputs"] = std::move(inputs);
  if (w) p["witness"] = S->format(*w);
  return p;
}

// is_invertible, or nothing when the carrier has no fractions.
std::optional<bool> invertible(const Ideal& I) {
  if (I.is_zero()) return std::nullopt;
  try {
    return is_invertible(I);
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

std::optional<bool> known_local(const SemiringPtr& S) {
  try {
    return is_local(S);
  } catch (const Unsupported&) {
    return std::nullopt;
  }
}

}  // namespace

// ---------------------------------------------------------------- Prüfer

std::vector<LawCheck> prufer_laws(const Ideal& I, const Ideal& J, const Ideal& K) {
  const auto& S = I.semiring();
  std::vector<LawCheck> out;
  out.push_back(eq_law("L1", intersect(I, add_ideals(J, K)), add_ideals(intersect(I, J), intersect(I, K))));
  out.push_back(eq_law("L2", mul_ideals(I, intersect(J, K)), intersect(mul_ideals(I, J), mul_ideals(I, K))));
  out.push_back(eq_law("L3", mul_ideals(add_ideals(I, J), intersect(I, J)), mul_ideals(I, J)));
  {
    auto a = colon(add_ideals(I, J), K), b = colon(I, K), c = colon(J, K);
    out.push_back(eq_law("L4", a.ideal, add_ideals(b.ideal, c.ideal),
                         a.verification.combine(b.verification).combine(c.verification)));
  }
  {
    auto a = colon(I, J), b = colon(J, I);
    out.push_back(eq_law("L5", add_ideals(a.ideal, b.ideal), unit_ideal(S), a.verification.combine(b.verification)));
  }
  {
    auto a = colon(K, intersect(I, J)), b = colon(K, I), c = colon(K, J);
    out.push_back(eq_law("L6", a.ideal, add_ideals(b.ideal, c.ideal),
                         a.verification.combine(b.verification).combine(c.verification)));
  }
  for (const Ideal* X : {&I, &J, &K}) {
    LawCheck c{"INV", true, false, std::nullopt, Verification::exact()};
    if (X->is_zero())
      c.skipped = true;
    else
      c.holds = is_invertible(*X);
    out.push_back(std::move(c));
  }
  return out;
}

SuiteReport prufer_suite(const SemiringPtr& S, const Sampler& sm) {
  require_semidomain(S, "prufer_suite");
  const auto t0 = Clock::now();
  auto r = new_report("prufer", S, sm);
  run_samples(r, sm, {"L1", "L2", "L3", "L4", "L5", "L6", "INV"}, [&](Rng& rng, Out& out) {
    Ideal I = sm.ideal(S, rng), J = sm.ideal(S, rng), K = sm.ideal(S, rng);
    for (auto& c : prufer_laws(I, J, K)) {
      if (c.skipped) {
        out.skip(c.law);
        continue;
      }
      out.check(c.law, c.holds, c.verification,
                [&] { return payload(ideals_json({{"I", &I}, {"J", &J}, {"K", &K}}), S, c.witness); });
    }
  });
  r.ms = ms_since(t0);
  return r;
}

// ---------------------------------------------------------------- cancellation

SuiteReport cancellation_suite(const SemiringPtr& S, const Sampler& sm) {
  if (!S->flags().membership_exact) throw PreconditionError("cancellation_suite needs exact membership, got " + S->id());
  const auto t0 = Clock::now();
  auto r = new_report("cancellation", S, sm);
  run_samples(r, sm, {"C1", "C2"}, [&](Rng& rng, Out& out) {
    Ideal I = sm.ideal(S, rng), J = sm.ideal(S, rng);
    if (invertible(I).value_or(false)) {
      auto c = colon(mul_ideals(I, J), I);
      auto sep = separating_element(c.ideal, J);
      out.check("C1", !sep, c.verification, [&] { return payload(ideals_json({{"I", &I}, {"J", &J}}), S, sep); });
    } else {
      out.skip("C1");
    }

    Ideal K = sm.ideal(S, rng), L = sm.ideal(S, rng);
    if (!invertible(K).value_or(false)) {
      out.skip("C2");
      return;
    }
    Ideal sub = intersect(L, K);
    std::optional<FractionalIdeal> kinv;
    try {
      kinv = inverse_candidate(K);
    } catch (const Unsupported&) {
      out.skip("C2");
      return;
    }
    auto q = frac_ideal_mul(*kinv, FractionalIdeal::of(sub)).as_integral();
    const bool holds = q && mul_ideals(K, *q) == sub;
    out.check("C2", holds, Verification::exact(),
              [&] { return payload(ideals_json({{"I", &sub}, {"K", &K}}), S, std::nullopt); });
  });
  r.ms = ms_since(t0);
  return r;
}

// ---------------------------------------------------------------- valuation

SuiteReport valuation_check(const SemiringPtr& S, const Sampler& sm) {
  require_semidomain(S, "valuation_check");
  const auto t0 = Clock::now();
  auto r = new_report("valuation", S, sm);
  run_samples(r, sm, {"V1", "V2"}, [&](Rng& rng, Out& out) {
    Element a = sm.element(S, rng), b = sm.element(S, rng);
    if (S->is_zero(a) || S->is_zero(b)) {
      out.skip("V1");
      out.skip("V2");
      return;
    }
    const bool total = contains(principal(S, a), b) || contains(principal(S, b), a);
    out.check("V1", total, Verification::exact(), [&] {
      json p;
      p["inputs"] = {{"a", S->format(a)}, {"b", S->format(b)}};
      return p;
    });
    Ideal ab = mk_ideal(S, {a, b});
    out.check("V2", ab.is_principal(), Verification::exact(),
              [&] { return payload(ideals_json({{"I", &ab}}), S, std::nullopt); });
  });
  auto local = known_local(S);
  if (local.value_or(false)) {
    auto& eq = law_slot(r, "V1<=>V2");
    const bool agree = (r.law("V1").fail == 0) == (r.law("V2").fail == 0);
    (agree ? eq.pass : eq.fail) = 1;
    r.status = agree ? (r.law("V1").fail == 0 ? "pass" : "fail") : "inconsistent";
  } else {
    r.notes.push_back(local ? "not local: V1 <=> V2 not asserted" : "locality unknown: V1 <=> V2 not asserted");
  }
  r.ms = ms_since(t0);
  return r;
}

SuiteReport locally_valuation_suite(const SemiringPtr& S, const std::vector<Int>& primes, const Sampler& sm) {
  require_semidomain(S, "locally_valuation_suite");
  std::vector<Ideal> P;
  switch (S->carrier()) {
    case Carrier::gcd_naturals: {
      std::vector<Int> ps = primes.empty() ? std::vector<Int>{2, 3, 5, 7} : primes;
      for (const auto& p : ps) {
        if (!is_prime(p)) throw PreconditionError(to_string(p) + " is not prime");
        P.push_back(principal(S, p));
      }
      break;
    }
    case Carrier::min_plus:
    case Carrier::naturals:
      P = maximal_ideals(S).ideals;
      break;
    default:
      if (!S->is_finite()) throw Unsupported("locally_valuation_suite on " + S->id());
      P = maximal_ideals(S).ideals;
  }
  const auto t0 = Clock::now();
  auto r = new_report("locally-valuation", S, sm);
  std::vector<std::string> ids;
  for (const auto& p : P) {
    ids.push_back("V1@" + format(p));
    ids.push_back("V2@" + format(p));
  }
  run_samples(r, sm, ids, [&](Rng& rng, Out& out) {
    Element a = sm.element(S, rng), b = sm.element(S, rng);
    for (std::size_t k = 0; k < P.size(); ++k) {
      if (S->is_zero(a) || S->is_zero(b)) {
        out.skip(ids[2 * k]);
        out.skip(ids[2 * k + 1]);
        continue;
      }
      Ideal La = localize_ideal(principal(S, a), P[k]), Lb = localize_ideal(principal(S, b), P[k]);
      auto inputs = [&] {
        json p;
        p["inputs"] = {{"a", S->format(a)}, {"b", S->format(b)}};
        p["localized"] = {{"a", format(La)}, {"b", format(Lb)}};
        return p;
      };
      out.check(ids[2 * k], is_subset(La, Lb) || is_subset(Lb, La), Verification::exact(), inputs);
      out.check(ids[2 * k + 1], localize_ideal(mk_ideal(S, {a, b}), P[k]).is_principal(), Verification::exact(),
                inputs);
    }
  });
  const bool local_pass = r.all_pass();
  auto pr = prufer_suite(S, sm);
  auto& agree = law_slot(r, "AGREE");
  (local_pass == pr.all_pass() ? agree.pass : agree.fail) = 1;
  r.notes.push_back(std::string("prufer_suite: ") + pr.status);
  if (agree.fail)
    r.status = "inconsistent";
  else
    r.status = local_pass ? "pass" : "fail";
  r.ms = ms_since(t0);
  return r;
}

// ---------------------------------------------------------------- Gilmer-Tsang

Decision classify_subtractive(const SemiringPtr& S) {
  if (S->is_finite()) {
    for (const auto& I : enumerate_ideals(S, FiniteTable::kMaxOrder))
      if (!is_subtractive(I).value) return {false, Verification::exact()};
    return {true, Verification::exact()};
  }
  switch (S->carrier()) {
    case Carrier::naturals:
      // ⟨2,3⟩ contains 2 and 2 + 1 but not 1.
      return {false, Verification::exact()};
    case Carrier::gcd_naturals:
    case Carrier::min_plus:
      return {true, Verification::exact()};
    case Carrier::fid:
      if (S->base()->prufer_known()) return {true, Verification::exact()};
      [[fallthrough]];
    default:
      throw Unsupported("subtractivity of every ideal of " + S->id());
  }
}

SuiteReport gilmer_tsang_suite(const SemiringPtr& S, const Sampler& sm) {
  const auto t0 = Clock::now();
  auto r = new_report("gilmer-tsang", S, sm);
  auto skip = [&](std::string why) {
    r.status = "skipped";
    r.notes.push_back(std::move(why));
    r.ms = ms_since(t0);
    return r;
  };
  if (!S->flags().semidomain) return skip("hypothesis: not a semidomain");
  if (!S->flags().membership_exact) return skip("hypothesis: membership not exact");
  Decision sub;
  try {
    sub = classify_subtractive(S);
  } catch (const Unsupported&) {
    return skip("hypothesis: subtractivity undecided");
  }
  if (!sub.value) return skip("hypothesis: not subtractive (" + sub.verification.str() + ")");
  r.notes.push_back("subtractive (" + sub.verification.str() + ")");

  run_samples(r, sm, {"H"}, [&](Rng& rng, Out& out) {
    Element a = sm.element(S, rng), b = sm.element(S, rng);
    out.check("H", ab_in_squares(S, a, b), Verification::exact(), [&] {
      json p;
      p["inputs"] = {{"a", S->format(a)}, {"b", S->format(b)}};
      return p;
    });
  });
  if (!r.all_pass()) return skip("hypothesis: ab in <a^2,b^2> fails on a sample");

  run_samples(r, sm, {"G1", "G2", "G3", "G4"}, [&](Rng& rng, Out& out) {
    Ideal I = sm.nonzero_ideal(S, rng);
    out.check("G1", is_invertible(I), Verification::exact(),
              [&] { return payload(ideals_json({{"I", &I}}), S, std::nullopt); });

    bool cancels = true;
    Verification v2;
    std::optional<Ideal> bad;
    std::optional<Element> w2;
    for (int k = 0; k < 3; ++k) {
      Ideal J = sm.ideal(S, rng);
      auto c = colon(mul_ideals(I, J), I);
      v2 = v2.combine(c.verification);
      auto sep = separating_element(c.ideal, J);
      if (sep && cancels) {
        cancels = false;
        bad = J;
        w2 = sep;
      }
    }
    out.check("G2", cancels, v2, [&] { return payload(ideals_json({{"I", &I}, {"J", &*bad}}), S, w2); });

    Ideal I3 = sm.ideal(S, rng), J3 = sm.ideal(S, rng);
    if (I3.is_zero()) {
      out.skip("G3");
    } else {
      auto c = colon(mul_ideals(I3, J3), I3);
      auto sep = separating_element(c.ideal, J3);
      out.check("G3", !sep, c.verification, [&] { return payload(ideals_json({{"I", &I3}, {"J", &J3}}), S, sep); });
    }

    auto f = sm.polynomial(S, rng, 3), g = sm.polynomial(S, rng, 3);
    auto gp = gaussian_pair(f, g);
    out.check("G4", gp.holds, Verification::exact(), [&] {
      json p;
      p["inputs"] = {{"f", f.str()}, {"g", g.str()}};
      if (gp.witness) p["witness"] = S->format(*gp.witness);
      return p;
    });
  });

  std::vector<bool> ok;
  for (const char* id : {"G1", "G2", "G3", "G4"}) ok.push_back(r.law(id).fail == 0);
  if (std::adjacent_find(ok.begin(), ok.end(), std::not_equal_to<>()) != ok.end()) {
    r.status = "inconsistent";
    r.notes.push_back("G1-G4 disagree: implementation bug");
  }
  r.ms = ms_since(t0);
  return r;
}

// ---------------------------------------------------------------- FId

Element fid_element(const Ideal& I) { return Element(std::make_shared<const Ideal>(I)); }

std::vector<Ideal> fid_elements(const SemiringPtr& S) {
  auto ideals = enumerate_ideals(S, FiniteTable::kMaxOrder);
  if (ideals.size() > FiniteTable::kMaxOrder)
    throw ResourceLimit(S->id() + " has " + std::to_string(ideals.size()) + " ideals, more than a table holds");
  return ideals;
}

SemiringPtr build_fid(const SemiringPtr& S) {
  if (!S->flags().membership_exact) throw PreconditionError("FId needs exact ideal equality, got " + S->id());
  if (!S->is_finite()) return Semiring::fid(S);
  auto ideals = fid_elements(S);
  std::map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < ideals.size(); ++i) index[member_mask(ideals[i])] = i;
  auto at = [&](const Ideal& I) { return index.at(member_mask(I)); };
  FiniteTable t(ideals.size(), at(zero_ideal(S)), at(unit_ideal(S)));
  for (std::size_t a = 0; a < ideals.size(); ++a)
    for (std::size_t b = 0; b < ideals.size(); ++b) {
      t.set_add(a, b, at(add_ideals(ideals[a], ideals[b])));
      t.set_mul(a, b, at(mul_ideals(ideals[a], ideals[b])));
    }
  if (auto v = verify_axioms(t); !v.empty()) throw InternalError("FId(" + S->id() + ") violates " + v.front().axiom);
  return Semiring::finite(std::move(t), "fid(" + S->id() + ")");
}

SuiteReport fid_suite(const SemiringPtr& S, const Sampler& sm) {
  const auto t0 = Clock::now();
  std::string basis;
  if (S->prufer_known()) {
    basis = "Prufer base: known";
  } else {
    auto pr = prufer_suite(S, sm);
    if (!pr.all_pass()) throw PreconditionError("fid_suite needs a Prufer base; prufer_suite fails on " + S->id());
    basis = "Prufer base: prufer_suite pass (sampled)";
  }
  auto F = build_fid(S);
  auto r = new_report("fid", S, sm);
  r.notes.push_back(basis);
  r.notes.push_back("F3 reads: IJ in <I^2, J^2> for all I, J");
  Sampler small = sm;
  small.min_gens = 1;
  small.max_gens = 2;
  const bool ideals_exact = F->flags().membership_exact;
  run_samples(r, sm, {"F1", "F2", "F3", "F4", "F5", "F6"}, [&](Rng& rng, Out& out) {
    Element X = sm.element(F, rng), Y = sm.element(F, rng);
    auto xy = [&] {
      json p;
      p["inputs"] = {{"I", F->format(X)}, {"J", F->format(Y)}};
      return p;
    };
    out.check("F1", F->equal(F->add(X, X), X), Verification::exact(), xy);
    const Element s = F->add(X, Y);
    out.check("F2", F->equal(F->mul(s, s), F->add(F->mul(X, X), F->mul(Y, Y))), Verification::exact(), xy);
    if (!ideals_exact) {
      for (const char* id : {"F3", "F5", "F6"}) out.skip(id);
    } else {
      out.check("F3", contains(mk_ideal(F, {F->mul(X, X), F->mul(Y, Y)}), F->mul(X, Y)), Verification::exact(), xy);
      Ideal I = small.ideal(F, rng);
      auto d = subtractive_scan(I, 6);
      out.check("F5", d.value, d.verification, [&] { return payload(ideals_json({{"I", &I}}), F, std::nullopt); });
      Ideal A = small.ideal(F, rng), B = small.ideal(F, rng), C = small.ideal(F, rng);
      bool holds = true;
      Verification v;
      std::optional<LawCheck> first;
      for (auto& c : prufer_laws(A, B, C)) {
        if (c.skipped) continue;
        v = v.combine(c.verification);
        if (!c.holds && holds) {
          holds = false;
          first = c;
        }
      }
      out.check("F6", holds, v, [&] {
        auto p = payload(ideals_json({{"I", &A}, {"J", &B}, {"K", &C}}), F, first->witness);
        p["law"] = first->law;
        return p;
      });
    }
    auto f = small.polynomial(F, rng, 2), g = small.polynomial(F, rng, 2);
    auto gp = gaussian_pair(f, g);
    out.check("F4", gp.holds, Verification::exact(), [&] {
      json p;
      p["inputs"] = {{"f", f.str()}, {"g", g.str()}};
      if (gp.witness) p["witness"] = F->format(*gp.witness);
      return p;
    });
  });
  r.ms = ms_since(t0);
  return r;
}

// ---------------------------------------------------------------- weak Gaussian

std::optional<Ideal> non_subtractive_prime(const SemiringPtr& S) {
  if (!S->is_finite()) throw Unsupported("weak Gaussian check needs a finite carrier, got " + S->id());
  for (const auto& I : enumerate_ideals(S, FiniteTable::kMaxOrder))
    if (is_prime(I) && !is_subtractive(I).value) return I;
  return std::nullopt;
}

bool weak_gaussian_check(const SemiringPtr& S) { return !non_subtractive_prime(S).has_value(); }

// ---------------------------------------------------------------- catalog

const std::vector<std::string>& suite_catalog() {
  static const std::vector<std::string> names = {"prufer",           "cancellation", "valuation",
                                                 "locally-valuation", "gilmer-tsang", "fid"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SemiringPtr& S, const Sampler& sm) {
  if (name == "prufer") return prufer_suite(S, sm);
  if (name == "cancellation") return cancellation_suite(S, sm);
  if (name == "valuation") return valuation_check(S, sm);
  if (name == "locally-valuation") return locally_valuation_suite(S, {}, sm);
  if (name == "gilmer-tsang") return gilmer_tsang_suite(S, sm);
  if (name == "fid") return fid_suite(S, sm);
  std::string msg = "unknown suite '" + name + "'; known suites:";
  for (const auto& n : suite_catalog()) msg += " " + n;
  throw Error(msg);
}

}  // namespace srlab
