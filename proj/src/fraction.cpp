#include "srlab/fraction.hpp"

#include <algorithm>

#include "srlab/error.hpp"

namespace srlab {

namespace {

void require_same(const SemiringPtr& a, const SemiringPtr& b) {
  if (!same_semiring(*a, *b)) throw CarrierMismatch("fractions over " + a->id() + " and " + b->id());
}

Element zero_tuple(const Semiring& S) { return S.one(); }

}  // namespace

Fraction::Fraction(SemiringPtr S, Element a, Element b) : ring_(std::move(S)), num_(std::move(a)), den_(std::move(b)) {
  const Semiring& R = *ring_;
  if (!R.flags().semidomain) throw PreconditionError("fractions need a semidomain, got " + R.id());
  R.check(num_);
  R.check(den_);
  if (!R.is_mc(den_)) throw PreconditionError("denominator " + R.format(den_) + " is not MC");
  switch (R.carrier()) {
    case Carrier::naturals:
    case Carrier::gcd_naturals: {
      if (num_.as_int() == 0) {
        den_ = R.one();
        break;
      }
      Int g = gcd(num_.as_int(), den_.as_int());
      num_ = Element(num_.as_int() / g);
      den_ = Element(den_.as_int() / g);
      break;
    }
    case Carrier::min_plus: {
      if (num_.is_bottom()) {
        den_ = zero_tuple(R);
        break;
      }
      Coords n = num_.coords(), d = den_.coords();
      for (std::size_t i = 0; i < n.size(); ++i) {
        Int m = std::min(n[i], d[i]);
        n[i] -= m;
        d[i] -= m;
      }
      num_ = Element(std::move(n));
      den_ = Element(std::move(d));
      break;
    }
    case Carrier::fid:
      break;
    default:
      // Finite semidomain: the MC denominator is a unit.
      for (const auto& u : R.elements()) {
        if (R.mul(den_, u) == R.one()) {
          num_ = R.mul(num_, u);
          den_ = R.one();
          break;
        }
      }
  }
}

std::optional<Element> Fraction::as_element() const {
  if (den_ == ring_->one()) return num_;
  return std::nullopt;
}

bool Fraction::is_unit() const { return ring_->is_mc(num_); }

std::string Fraction::str() const { return ring_->format(num_) + "/" + ring_->format(den_); }

Fraction frac_add(const Fraction& x, const Fraction& y) {
  require_same(x.semiring(), y.semiring());
  const auto& S = *x.semiring();
  return Fraction(x.semiring(), S.add(S.mul(x.num(), y.den()), S.mul(x.den(), y.num())), S.mul(x.den(), y.den()));
}

Fraction frac_mul(const Fraction& x, const Fraction& y) {
  require_same(x.semiring(), y.semiring());
  const auto& S = *x.semiring();
  return Fraction(x.semiring(), S.mul(x.num(), y.num()), S.mul(x.den(), y.den()));
}

bool frac_eq(const Fraction& x, const Fraction& y) {
  require_same(x.semiring(), y.semiring());
  const auto& S = *x.semiring();
  return S.mul(x.num(), y.den()) == S.mul(x.den(), y.num());
}

Fraction frac_inverse(const Fraction& x) {
  if (!x.is_unit()) throw PreconditionError("fraction " + x.str() + " has no inverse");
  return Fraction(x.semiring(), x.den(), x.num());
}

FractionalIdeal::FractionalIdeal(Ideal num, Element den) : num_(std::move(num)), den_(std::move(den)) {
  const auto& S = num_.semiring();
  S->check(den_);
  if (!S->is_mc(den_)) throw PreconditionError("denominator " + S->format(den_) + " is not MC");
  if (num_.is_zero()) {
    den_ = S->one();
    return;
  }
  // Cancel a common factor of the numerator and the denominator.
  switch (S->carrier()) {
    case Carrier::gcd_naturals:
    case Carrier::naturals: {
      const Int period = S->carrier() == Carrier::naturals ? std::get<NatPeriodicForm>(num_.canonical()).period
                                                          : num_.basis()[0].as_int();
      const Int g = gcd(period, den_.as_int());
      if (g == 1) break;
      std::vector<Element> gens;
      for (const auto& b : num_.basis()) gens.emplace_back(b.as_int() / g);
      num_ = mk_ideal(S, std::move(gens));
      den_ = Element(den_.as_int() / g);
      break;
    }
    case Carrier::min_plus: {
      Coords h = num_.basis()[0].coords(), d = den_.coords();
      for (std::size_t i = 0; i < h.size(); ++i) {
        Int m = std::min(h[i], d[i]);
        h[i] -= m;
        d[i] -= m;
      }
      num_ = principal(S, Element(std::move(h)));
      den_ = Element(std::move(d));
      break;
    }
    default:
      break;
  }
}

std::vector<Fraction> FractionalIdeal::generators() const {
  std::vector<Fraction> out;
  for (const auto& b : num_.basis()) out.emplace_back(semiring(), b, den_);
  return out;
}

std::optional<Ideal> FractionalIdeal::as_integral() const {
  std::vector<Element> gens;
  for (const auto& f : generators()) {
    auto e = f.as_element();
    if (!e) return std::nullopt;
    gens.push_back(*e);
  }
  return mk_ideal(semiring(), std::move(gens));
}

std::string FractionalIdeal::str() const {
  const auto& S = *semiring();
  std::string s = "(1/" + S.format(den_) + ")<";
  for (std::size_t i = 0; i < num_.basis().size(); ++i) s += (i ? "," : "") + S.format(num_.basis()[i]);
  return s + ">";
}

nlohmann::ordered_json FractionalIdeal::to_json() const {
  nlohmann::ordered_json j;
  j["denominator"] = semiring()->format(den_);
  auto gens = nlohmann::ordered_json::array();
  for (const auto& b : num_.basis()) gens.push_back(semiring()->format(b));
  j["numerator"] = gens;
  j["text"] = str();
  return j;
}

FractionalIdeal frac_ideal_mul(const FractionalIdeal& A, const FractionalIdeal& B) {
  require_same(A.semiring(), B.semiring());
  return FractionalIdeal(mul_ideals(A.num(), B.num()), A.semiring()->mul(A.den(), B.den()));
}

FractionalIdeal frac_ideal_add(const FractionalIdeal& A, const FractionalIdeal& B) {
  require_same(A.semiring(), B.semiring());
  const auto& S = A.semiring();
  auto left = mul_ideals(A.num(), principal(S, B.den()));
  auto right = mul_ideals(B.num(), principal(S, A.den()));
  return FractionalIdeal(add_ideals(left, right), S->mul(A.den(), B.den()));
}

bool frac_ideal_eq(const FractionalIdeal& A, const FractionalIdeal& B) {
  require_same(A.semiring(), B.semiring());
  const auto& S = A.semiring();
  return mul_ideals(A.num(), principal(S, B.den())) == mul_ideals(B.num(), principal(S, A.den()));
}

bool is_whole(const FractionalIdeal& A) {
  return frac_ideal_eq(A, FractionalIdeal::of(unit_ideal(A.semiring())));
}

namespace {

void require_nonzero_semidomain(const Ideal& I) {
  const auto& S = I.semiring();
  if (!S->flags().semidomain) throw PreconditionError("invertibility needs a semidomain, got " + S->id());
  if (I.is_zero()) throw PreconditionError("the zero ideal is not invertible");
}

}  // namespace

FractionalIdeal inverse_candidate(const Ideal& I) {
  require_nonzero_semidomain(I);
  const auto& S = I.semiring();
  const auto& g = I.principal_generator();
  if (!g) throw Unsupported("no inverse candidate for the non-principal ideal " + format(I) + " of " + S->id());
  return FractionalIdeal(unit_ideal(S), *g);
}

bool is_invertible(const Ideal& I) {
  require_nonzero_semidomain(I);
  const auto& S = I.semiring();
  if (contains(I, S->one())) return true;
  if (const auto& g = I.principal_generator()) return S->is_mc(*g);
  // Invertible ideals of a local semidomain are principal.
  if (S->carrier() == Carrier::naturals) return false;
  return is_whole(frac_ideal_mul(inverse_candidate(I), FractionalIdeal::of(I)));
}

Element extract_generator_local(const Ideal& I, const FractionalIdeal& J) {
  const auto& S = I.semiring();
  require_nonzero_semidomain(I);
  bool local = false;
  try {
    local = is_local(S);
  } catch (const Unsupported&) {
  }
  if (!local) throw PreconditionError(S->id() + " is not known to be local");
  if (!is_whole(frac_ideal_mul(FractionalIdeal::of(I), J)))
    throw PreconditionError("I·J ≠ S for I = " + format(I) + ", J = " + J.str());
  for (const auto& s : I.generators()) {
    for (const auto& t : J.num().basis()) {
      auto term = Fraction(S, S->mul(s, t), J.den()).as_element();
      if (term && S->is_unit(*term)) {
        if (!(principal(S, s) == I)) throw InternalError("extracted generator does not generate I");
        return s;
      }
    }
  }
  throw PreconditionError("no unit term s_i·t_j found");
}

SemilocalTrace extract_generator_semilocal(const Ideal& I) {
  const auto& S = I.semiring();
  if (S->carrier() != Carrier::min_plus) throw Unsupported("semilocal extraction is implemented for min-plus(k)");
  require_nonzero_semidomain(I);
  const unsigned k = S->dimension();
  const auto J = inverse_candidate(I);
  const Fraction b(S, J.num().basis()[0], J.den());

  std::vector<Element> as;
  for (unsigned i = 0; i < k; ++i) {
    bool found = false;
    for (const auto& x : I.generators()) {
      auto prod = frac_mul(Fraction::of(S, x), b).as_element();
      if (prod && prod->coords()[i] == 0) {
        as.push_back(x);
        found = true;
        break;
      }
    }
    if (!found) throw InternalError("no generator avoids the maximal ideal at coordinate " + std::to_string(i));
  }

  std::vector<Element> us;
  std::optional<Fraction> v;
  for (unsigned i = 0; i < k; ++i) {
    Coords u(k, Int(1));
    u[i] = 0;
    us.emplace_back(u);
    Fraction term = frac_mul(Fraction::of(S, us.back()), b);
    v = v ? frac_add(*v, term) : term;
  }
  FractionalIdeal vI(mul_ideals(principal(S, v->num()), I), v->den());
  if (!is_whole(vI)) throw PreconditionError("v·I ≠ S for v = " + v->str());
  auto gen = frac_inverse(*v).as_element();
  if (!gen || !(principal(S, *gen) == I)) throw InternalError("semilocal construction did not recover a generator");
  return SemilocalTrace{*gen, std::move(us), std::move(as), *v};
}

Ideal localize_ideal(const Ideal& I, const Ideal& P) {
  const auto& S = I.semiring();
  if (!same_semiring(*S, *P.semiring())) throw CarrierMismatch("ideal and prime over different semirings");
  if (!is_prime(P)) throw PreconditionError(format(P) + " is not prime");
  switch (S->carrier()) {
    case Carrier::gcd_naturals: {
      const Int& p = P.basis()[0].as_int();
      if (p == 0) throw Unsupported("localization at the zero ideal is the quotient field");
      auto M = Semiring::min_plus(1);
      if (I.is_zero()) return zero_ideal(M);
      return principal(M, Element(Coords{Int(valuation(I.basis()[0].as_int(), p))}));
    }
    case Carrier::min_plus: {
      auto maxes = maximal_ideals(S).ideals;
      for (std::size_t i = 0; i < maxes.size(); ++i) {
        if (!(maxes[i] == P)) continue;
        auto M = Semiring::min_plus(1);
        if (I.is_zero()) return zero_ideal(M);
        return principal(M, Element(Coords{I.basis()[0].coords()[i]}));
      }
      throw Unsupported("min-plus localization is implemented at the coordinate maximal ideals");
    }
    case Carrier::naturals:
      if (P == mk_ideal(S, {2, 3})) return I;  // the complement {1} consists of units
      throw Unsupported("naturals localization is implemented at the maximal ideal only");
    default:
      if (S->is_finite() && S->flags().semidomain) return I;  // a finite semidomain is a semifield
      throw Unsupported("localization on " + S->id());
  }
}

bool locally_principal_check(const Ideal& I, const std::vector<Ideal>& primes) {
  const auto& S = I.semiring();
  if (S->carrier() == Carrier::gcd_naturals && !I.is_zero()) {
    for (const Int& q : prime_factors(I.basis()[0].as_int())) {
      bool listed = std::any_of(primes.begin(), primes.end(), [&](const Ideal& P) { return P == principal(S, q); });
      if (!listed) throw PreconditionError("incomplete prime list: <" + to_string(q) + "> divides the ideal");
    }
  }
  return std::all_of(primes.begin(), primes.end(), [&](const Ideal& P) { return localize_ideal(I, P).is_principal(); });
}

}  // namespace srlab
