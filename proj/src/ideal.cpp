#include "srlab/ideal.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>

#include "nat_monoid.hpp"
#include "srlab/error.hpp"

namespace srlab {

Verification Verification::combine(const Verification& o) const {
  if (is_exact()) return o;
  if (o.is_exact()) return *this;
  return bounded(std::min(bound, o.bound));
}

std::string Verification::str() const {
  return is_exact() ? "exact" : "bounded(" + std::to_string(bound) + ")";
}

std::vector<Int> NatPeriodicForm::sporadic() const {
  std::vector<Int> out;
  for (std::int64_t y : monoid->sporadic()) out.push_back(period * y);
  return out;
}

bool NatPeriodicForm::contains(const Int& x) const {
  if (x < 0 || x % period != 0) return false;
  if (x >= conductor) return true;
  return monoid->contains((x / period).convert_to<std::int64_t>());
}

bool operator==(const Element& a, const Element& b) {
  if (a.value().index() != b.value().index()) return false;
  if (a.is_ideal()) {
    const auto& x = a.ideal_ptr();
    const auto& y = b.ideal_ptr();
    if (!x || !y) return x == y;
    return x == y || *x == *y;
  }
  return a.value() == b.value();
}

namespace {

void require_same(const Ideal& I, const Ideal& J) {
  if (!same_semiring(*I.semiring(), *J.semiring()))
    throw CarrierMismatch("ideals over " + I.semiring()->id() + " and " + J.semiring()->id());
}

const NatPeriodicForm& nat_form(const Ideal& I) { return std::get<NatPeriodicForm>(I.canonical()); }

std::uint64_t mask_of_indices(const SemiringPtr& S, const std::vector<Element>& xs) {
  std::uint64_t m = 0;
  for (const auto& x : xs) m |= std::uint64_t{1} << S->index_of(x);
  return m;
}

std::vector<Element> elements_of_mask(const SemiringPtr& S, std::uint64_t mask) {
  std::vector<Element> out;
  const auto& el = S->elements();
  for (std::size_t i = 0; i < el.size(); ++i)
    if (mask >> i & 1) out.push_back(el[i]);
  return out;
}

std::int64_t small(const Int& x, const char* what) {
  if (x > Int(1) << 32) throw ResourceLimit(std::string(what) + " too large for an exact scan");
  return x.convert_to<std::int64_t>();
}

}  // namespace

bool Ideal::is_zero() const {
  const auto* p = std::get_if<PrincipalForm>(&form_);
  return p && ring_->is_zero(p->generator);
}

Ideal mk_ideal(const SemiringPtr& S, std::vector<Element> gens) {
  if (gens.empty()) throw PreconditionError("an ideal needs at least one generator");
  for (const auto& g : gens) S->check(g);
  std::sort(gens.begin(), gens.end(), [&](const Element& a, const Element& b) { return S->compare(a, b) < 0; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::erase_if(gens, [&](const Element& g) { return S->is_zero(g); });

  Ideal I;
  I.ring_ = S;
  auto set_principal = [&](Element g) {
    I.form_ = PrincipalForm{g};
    I.basis_ = {g};
    I.principal_gen_ = std::move(g);
  };
  if (gens.empty()) {
    I.gens_ = {S->zero()};
    set_principal(S->zero());
    return I;
  }
  I.gens_ = gens;

  switch (S->carrier()) {
    case Carrier::gcd_naturals: {
      Int g = 0;
      for (const auto& x : gens) g = gcd(g, x.as_int());
      set_principal(Element(g));
      break;
    }
    case Carrier::min_plus: {
      Coords c = gens.front().coords();
      for (const auto& x : gens)
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::min(c[i], x.coords()[i]);
      set_principal(Element(std::move(c)));
      break;
    }
    case Carrier::boolean:
    case Carrier::divisor_lattice:
    case Carrier::powerset_lattice:
    case Carrier::fid: {
      if (S->carrier() == Carrier::fid && gens.size() > 1 && !S->base()->prufer_known())
        throw Unsupported("multi-generated ideals of " + S->id() + " have no decidable membership");
      Element join = gens.front();
      for (const auto& x : gens) join = S->add(join, x);
      set_principal(std::move(join));
      break;
    }
    case Carrier::naturals: {
      Int d = 0;
      for (const auto& x : gens) d = gcd(d, x.as_int());
      std::vector<Int> scaled;
      for (const auto& x : gens) scaled.push_back(x.as_int() / d);
      auto monoid = detail::monoid_from_generators(scaled);
      NatPeriodicForm f{d, d * monoid->conductor(), monoid};
      for (std::int64_t g : monoid->minimal_generators()) I.basis_.emplace_back(d * g);
      if (monoid->m == 1) I.principal_gen_ = Element(d);
      I.form_ = std::move(f);
      break;
    }
    case Carrier::finite_table: {
      const auto& t = S->table();
      const std::uint64_t mask = ideal_closure(t, mask_of_indices(S, gens));
      I.form_ = FiniteClosureForm{mask};
      // Greedy generating set in element order, then drop redundant members.
      std::vector<std::size_t> chosen;
      std::uint64_t cur = ideal_closure(t, 0);
      for (std::size_t i = 0; i < t.order(); ++i) {
        if ((mask >> i & 1) && !(cur >> i & 1)) {
          chosen.push_back(i);
          cur = ideal_closure(t, cur | std::uint64_t{1} << i);
        }
      }
      for (std::size_t k = 0; k < chosen.size();) {
        std::uint64_t rest = 0;
        for (std::size_t j = 0; j < chosen.size(); ++j)
          if (j != k) rest |= std::uint64_t{1} << chosen[j];
        if (chosen.size() > 1 && ideal_closure(t, rest) == mask)
          chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(k));
        else
          ++k;
      }
      for (std::size_t i : chosen) I.basis_.emplace_back(i);
      for (std::size_t i = 0; i < t.order(); ++i) {
        if (ideal_closure(t, std::uint64_t{1} << i) == mask) {
          I.principal_gen_ = Element(i);
          break;
        }
      }
      break;
    }
  }
  return I;
}

Ideal principal(const SemiringPtr& S, const Element& g) { return mk_ideal(S, {g}); }
Ideal zero_ideal(const SemiringPtr& S) { return mk_ideal(S, {S->zero()}); }
Ideal unit_ideal(const SemiringPtr& S) { return mk_ideal(S, {S->one()}); }

bool contains(const Ideal& I, const Element& x) {
  const auto& S = I.semiring();
  S->check(x);
  if (const auto* p = std::get_if<PrincipalForm>(&I.canonical())) {
    const Element& g = p->generator;
    if (S->is_zero(g)) return S->is_zero(x);
    switch (S->carrier()) {
      case Carrier::gcd_naturals:
        return x.as_int() % g.as_int() == 0;
      case Carrier::min_plus:
        if (x.is_bottom()) return true;
        for (std::size_t i = 0; i < g.coords().size(); ++i)
          if (x.coords()[i] < g.coords()[i]) return false;
        return true;
      case Carrier::fid:
        if (x.ideal().is_zero() || g.ideal() == unit_ideal(S->base())) return true;
        if (!S->base()->prufer_known())
          throw Unsupported("membership in ideals of " + S->id() + " is not decidable here");
        return is_subset(x.ideal(), g.ideal());
      default:
        return S->mul(x, g) == x;
    }
  }
  if (const auto* f = std::get_if<NatPeriodicForm>(&I.canonical())) return f->contains(x.as_int());
  return std::get<FiniteClosureForm>(I.canonical()).members >> S->index_of(x) & 1;
}

Ideal add_ideals(const Ideal& I, const Ideal& J) {
  require_same(I, J);
  std::vector<Element> g = I.basis();
  g.insert(g.end(), J.basis().begin(), J.basis().end());
  return mk_ideal(I.semiring(), std::move(g));
}

Ideal mul_ideals(const Ideal& I, const Ideal& J) {
  require_same(I, J);
  const auto& S = I.semiring();
  std::vector<Element> g;
  for (const auto& a : I.basis())
    for (const auto& b : J.basis()) g.push_back(S->mul(a, b));
  return mk_ideal(S, std::move(g));
}

Ideal pow(const Ideal& I, unsigned e) {
  Ideal r = unit_ideal(I.semiring());
  for (unsigned i = 0; i < e; ++i) r = mul_ideals(r, I);
  return r;
}

namespace {

Ideal finite_scan(const SemiringPtr& S, const std::function<bool(const Element&)>& member) {
  std::vector<Element> out;
  for (const auto& s : S->elements())
    if (member(s)) out.push_back(s);
  if (out.empty()) out.push_back(S->zero());
  return mk_ideal(S, std::move(out));
}

}  // namespace

Ideal intersect(const Ideal& I, const Ideal& J) {
  require_same(I, J);
  const auto& S = I.semiring();
  if (I.is_zero() || J.is_zero()) return zero_ideal(S);
  if (S->is_finite()) {
    return finite_scan(S, [&](const Element& s) { return contains(I, s) && contains(J, s); });
  }
  switch (S->carrier()) {
    case Carrier::gcd_naturals:
      return principal(S, lcm(I.basis()[0].as_int(), J.basis()[0].as_int()));
    case Carrier::min_plus: {
      Coords c = I.basis()[0].coords();
      const auto& d = J.basis()[0].coords();
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::max(c[i], d[i]);
      return principal(S, Element(std::move(c)));
    }
    case Carrier::fid: {
      if (!S->base()->prufer_known()) throw Unsupported("intersection in " + S->id());
      auto g = std::make_shared<const Ideal>(
          intersect(I.principal_generator()->ideal(), J.principal_generator()->ideal()));
      return principal(S, Element(g));
    }
    case Carrier::naturals: {
      const auto& a = nat_form(I);
      const auto& b = nat_form(J);
      const Int L = lcm(a.period, b.period);
      const std::int64_t la = small(L / a.period, "intersection period");
      const std::int64_t lb = small(L / b.period, "intersection period");
      auto m = detail::monoid_from_predicate(
          [&](std::int64_t y) { return a.monoid->contains(y * la) && b.monoid->contains(y * lb); });
      std::vector<Element> gens;
      for (std::int64_t g : m->minimal_generators()) gens.emplace_back(L * g);
      return mk_ideal(S, std::move(gens));
    }
    default:
      throw InternalError("intersection: unhandled carrier");
  }
}

ColonResult colon(const Ideal& I, const Ideal& J) {
  require_same(I, J);
  const auto& S = I.semiring();
  const auto exact = Verification::exact();
  if (J.is_zero()) return {unit_ideal(S), exact};
  if (I.is_zero() && S->flags().semidomain) return {zero_ideal(S), exact};
  if (S->is_finite()) {
    auto r = finite_scan(S, [&](const Element& s) {
      for (const auto& b : J.basis())
        if (!contains(I, S->mul(s, b))) return false;
      return true;
    });
    return {r, exact};
  }
  switch (S->carrier()) {
    case Carrier::gcd_naturals: {
      const Int& a = I.basis()[0].as_int();
      return {principal(S, a / gcd(a, J.basis()[0].as_int())), exact};
    }
    case Carrier::min_plus: {
      Coords c = I.basis()[0].coords();
      const auto& b = J.basis()[0].coords();
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = c[i] > b[i] ? Int(c[i] - b[i]) : Int(0);
      return {principal(S, Element(std::move(c))), exact};
    }
    case Carrier::fid: {
      if (!S->base()->prufer_known()) throw Unsupported("colon in " + S->id());
      auto inner = colon(I.principal_generator()->ideal(), J.principal_generator()->ideal());
      return {principal(S, Element(std::make_shared<const Ideal>(inner.ideal))), inner.verification};
    }
    case Carrier::naturals: {
      // s·b ∈ I needs d | s·b, i.e. d/gcd(d,b) | s; write s = L·y and test
      // each y directly, which is exact because membership in I is.
      const auto& f = nat_form(I);
      const Int& d = f.period;
      Int L = 1;
      for (const auto& b : J.basis()) L = lcm(L, d / gcd(d, b.as_int()));
      std::vector<std::int64_t> coef;
      for (const auto& b : J.basis()) coef.push_back(small(L * b.as_int() / d, "colon coefficient"));
      auto m = detail::monoid_from_predicate([&](std::int64_t y) {
        for (std::int64_t c : coef)
          if (!f.monoid->contains(y * c)) return false;
        return true;
      });
      std::vector<Element> gens;
      for (std::int64_t g : m->minimal_generators()) gens.emplace_back(L * g);
      return {mk_ideal(S, std::move(gens)), exact};
    }
    default:
      throw InternalError("colon: unhandled carrier");
  }
}

bool equals(const Ideal& I, const Ideal& J) {
  require_same(I, J);
  const auto& a = I.canonical();
  const auto& b = J.canonical();
  if (a.index() != b.index()) return false;
  if (const auto* p = std::get_if<PrincipalForm>(&a)) return p->generator == std::get<PrincipalForm>(b).generator;
  if (const auto* p = std::get_if<NatPeriodicForm>(&a)) {
    const auto& q = std::get<NatPeriodicForm>(b);
    return p->period == q.period && *p->monoid == *q.monoid;
  }
  return std::get<FiniteClosureForm>(a).members == std::get<FiniteClosureForm>(b).members;
}

bool operator==(const Ideal& I, const Ideal& J) {
  return same_semiring(*I.semiring(), *J.semiring()) && equals(I, J);
}

bool is_subset(const Ideal& I, const Ideal& J) {
  require_same(I, J);
  return std::all_of(I.basis().begin(), I.basis().end(), [&](const Element& g) { return contains(J, g); });
}

std::optional<Element> separating_element(const Ideal& A, const Ideal& B) {
  require_same(A, B);
  for (const auto& g : A.basis())
    if (!contains(B, g)) return g;
  for (const auto& g : B.basis())
    if (!contains(A, g)) return g;
  return std::nullopt;
}

Decision subtractive_scan(const Ideal& I, std::int64_t bound) {
  const auto& S = I.semiring();
  auto probes = S->probe_elements(bound);
  std::vector<Element> members;
  for (const auto& a : probes)
    if (contains(I, a)) members.push_back(a);
  for (const auto& a : members)
    for (const auto& b : probes)
      if (contains(I, S->add(a, b)) && !contains(I, b)) return {false, Verification::exact()};
  if (S->is_finite()) return {true, Verification::exact()};
  return {true, Verification::bounded(bound)};
}

Decision is_subtractive(const Ideal& I, std::int64_t bound) {
  const auto& S = I.semiring();
  switch (S->carrier()) {
    case Carrier::naturals:
      return {I.is_zero() || nat_form(I).conductor == 0, Verification::exact()};
    case Carrier::gcd_naturals:
    case Carrier::min_plus:
      return {true, Verification::exact()};
    case Carrier::fid:
      // Y ⊆ X + Y ⊆ G whenever X + Y ∈ ⟨G⟩.
      if (S->base()->prufer_known()) return {true, Verification::exact()};
      return subtractive_scan(I, bound);
    default:
      return subtractive_scan(I, bound);
  }
}

bool is_prime(const Ideal& I) {
  const auto& S = I.semiring();
  if (contains(I, S->one())) return false;
  if (S->is_finite()) {
    const auto& el = S->elements();
    for (std::size_t i = 0; i < el.size(); ++i)
      for (std::size_t j = i; j < el.size(); ++j)
        if (contains(I, S->mul(el[i], el[j])) && !contains(I, el[i]) && !contains(I, el[j])) return false;
    return true;
  }
  if (I.is_zero()) return S->flags().semidomain;
  switch (S->carrier()) {
    case Carrier::gcd_naturals:
      return is_prime(I.basis()[0].as_int());
    case Carrier::naturals: {
      // Prime ideals of N0: {0}, pN0, and N0 \ {1}.
      const auto& f = nat_form(I);
      if (f.conductor == 0) return is_prime(f.period);
      return f.period == 1 && f.monoid->m == 2 && f.monoid->apery == std::vector<std::int64_t>{0, 3};
    }
    case Carrier::min_plus: {
      int ones = 0;
      for (const auto& c : I.basis()[0].coords()) {
        if (c > 1) return false;
        if (c == 1) ++ones;
      }
      return ones == 1;
    }
    default:
      throw Unsupported("no primality rule for " + S->id());
  }
}

namespace {

bool mask_less(std::uint64_t a, std::uint64_t b) {
  if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
  if (a == b) return false;
  std::uint64_t diff = a ^ b;
  return (a & (diff & -diff)) != 0;
}

std::vector<std::uint64_t> ideal_masks(const SemiringPtr& S) {
  const auto& t = S->table();
  std::vector<std::uint64_t> singles;
  for (std::size_t a = 0; a < t.order(); ++a) singles.push_back(ideal_closure(t, std::uint64_t{1} << a));
  std::vector<std::uint64_t> all{ideal_closure(t, 0)};
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::uint64_t p : singles) {
      std::uint64_t j = ideal_closure(t, all[i] | p);
      if (std::find(all.begin(), all.end(), j) == all.end()) all.push_back(j);
    }
  }
  std::sort(all.begin(), all.end(), mask_less);
  return all;
}

}  // namespace

std::vector<Ideal> enumerate_ideals(const SemiringPtr& S, std::size_t max_order) {
  if (!S->is_finite()) throw Unsupported("ideal enumeration needs a finite carrier, got " + S->id());
  if (S->elements().size() > max_order)
    throw ResourceLimit("ideal enumeration capped at order " + std::to_string(max_order) + ", got " +
                        std::to_string(S->elements().size()));
  std::vector<Ideal> out;
  for (std::uint64_t m : ideal_masks(S)) out.push_back(mk_ideal(S, elements_of_mask(S, m)));
  return out;
}

MaximalIdeals maximal_ideals(const SemiringPtr& S, std::optional<Int> prime_bound) {
  MaximalIdeals r;
  if (S->is_finite()) {
    const std::uint64_t full = ideal_closure(S->table(), std::uint64_t{1} << S->index_of(S->one()));
    auto masks = ideal_masks(S);
    std::erase(masks, full);
    for (std::uint64_t m : masks) {
      bool maximal = std::none_of(masks.begin(), masks.end(), [&](std::uint64_t o) { return o != m && (o & m) == m; });
      if (maximal) r.ideals.push_back(mk_ideal(S, elements_of_mask(S, m)));
    }
    return r;
  }
  switch (S->carrier()) {
    case Carrier::naturals:
      r.ideals.push_back(mk_ideal(S, {2, 3}));
      return r;
    case Carrier::min_plus:
      for (unsigned i = 0; i < S->dimension(); ++i) {
        Coords e(S->dimension(), Int(0));
        e[i] = 1;
        r.ideals.push_back(principal(S, Element(std::move(e))));
      }
      return r;
    case Carrier::gcd_naturals:
      if (!prime_bound) throw Unsupported("maximal ideals of gcd-naturals need a prime bound");
      for (Int p = 2; p <= *prime_bound; ++p)
        if (is_prime(p)) r.ideals.push_back(principal(S, p));
      r.partial = true;
      return r;
    default:
      throw Unsupported("maximal ideals of " + S->id() + " are not known");
  }
}

bool is_local(const SemiringPtr& S, std::optional<Int> prime_bound) {
  auto m = maximal_ideals(S, prime_bound);
  if (m.ideals.size() >= 2) return false;
  if (m.partial) throw PreconditionError("prime bound too small to decide locality");
  return m.ideals.size() == 1;
}

std::uint64_t member_mask(const Ideal& I) {
  const auto& S = I.semiring();
  std::uint64_t m = 0;
  const auto& el = S->elements();
  for (std::size_t i = 0; i < el.size(); ++i)
    if (contains(I, el[i])) m |= std::uint64_t{1} << i;
  return m;
}

namespace {

std::string join_elements(const Semiring& S, const std::vector<Element>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + S.format(xs[i]);
  return s;
}

nlohmann::ordered_json int_json(const Int& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return to_string(x);
}

constexpr std::size_t kSporadicShown = 64;

}  // namespace

std::string format(const Ideal& I) { return "<" + join_elements(*I.semiring(), I.generators()) + ">"; }

std::string format_canonical(const Ideal& I) {
  const auto& S = *I.semiring();
  if (const auto* p = std::get_if<PrincipalForm>(&I.canonical())) return "Principal(" + S.format(p->generator) + ")";
  if (const auto* f = std::get_if<NatPeriodicForm>(&I.canonical())) {
    std::string s = "NatPeriodic(d=" + to_string(f->period) + ", C=" + to_string(f->conductor) + ", sporadic={";
    auto sp = f->monoid->sporadic();
    for (std::size_t i = 0; i < sp.size() && i < kSporadicShown; ++i)
      s += (i ? "," : "") + to_string(f->period * sp[i]);
    if (sp.size() > kSporadicShown) s += ",... " + std::to_string(sp.size()) + " total";
    return s + "})";
  }
  return "FiniteClosure{" + join_elements(S, elements_of_mask(I.semiring(), std::get<FiniteClosureForm>(I.canonical()).members)) + "}";
}

nlohmann::ordered_json canonical_json(const Ideal& I, const Verification& v) {
  const auto& S = *I.semiring();
  nlohmann::ordered_json j;
  nlohmann::ordered_json data;
  if (const auto* p = std::get_if<PrincipalForm>(&I.canonical())) {
    j["kind"] = "principal";
    data["generator"] = S.format(p->generator);
  } else if (const auto* f = std::get_if<NatPeriodicForm>(&I.canonical())) {
    j["kind"] = "nat-periodic";
    data["period"] = int_json(f->period);
    data["conductor"] = int_json(f->conductor);
    auto sp = f->monoid->sporadic();
    auto arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < sp.size() && i < kSporadicShown; ++i) arr.push_back(int_json(f->period * sp[i]));
    data["sporadic"] = arr;
    data["sporadic_count"] = sp.size();
    auto gens = nlohmann::ordered_json::array();
    for (const auto& g : I.basis()) gens.push_back(int_json(g.as_int()));
    data["minimal_generators"] = gens;
  } else {
    j["kind"] = "finite-closure";
    auto arr = nlohmann::ordered_json::array();
    for (const auto& e : elements_of_mask(I.semiring(), std::get<FiniteClosureForm>(I.canonical()).members))
      arr.push_back(S.format(e));
    data["members"] = arr;
  }
  j["data"] = data;
  j["verification"] = v.str();
  return j;
}

std::strong_ordering compare_ideals(const Ideal& I, const Ideal& J) {
  const auto& a = I.canonical();
  const auto& b = J.canonical();
  if (a.index() != b.index()) return a.index() <=> b.index();
  if (const auto* p = std::get_if<PrincipalForm>(&a))
    return I.semiring()->compare(p->generator, std::get<PrincipalForm>(b).generator);
  if (const auto* p = std::get_if<NatPeriodicForm>(&a)) {
    const auto& q = std::get<NatPeriodicForm>(b);
    if (p->period != q.period) return p->period < q.period ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = p->monoid->m <=> q.monoid->m; c != 0) return c;
    return p->monoid->apery <=> q.monoid->apery;
  }
  std::uint64_t x = std::get<FiniteClosureForm>(a).members, y = std::get<FiniteClosureForm>(b).members;
  if (x == y) return std::strong_ordering::equal;
  return mask_less(x, y) ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace srlab
