#include "srlab/semiring.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "srlab/error.hpp"
#include "srlab/ideal.hpp"
#include "srlab/rng.hpp"

namespace srlab {

Element Element::tuple(std::initializer_list<long long> xs) {
  Coords c;
  for (long long x : xs) c.emplace_back(x);
  return Element(std::move(c));
}

namespace {

std::uint64_t mask_of(const Element& a) { return a.as_int().convert_to<std::uint64_t>(); }

// Every ideal of a small table is generated by a single element.
bool table_principal(const FiniteTable& t) {
  const std::size_t n = t.order();
  if (n > 16) return false;
  std::vector<std::uint64_t> principal;
  for (std::size_t a = 0; a < n; ++a) principal.push_back(ideal_closure(t, std::uint64_t{1} << a));
  std::vector<std::uint64_t> all = principal;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::uint64_t p : principal) {
      std::uint64_t j = ideal_closure(t, all[i] | p);
      if (std::find(all.begin(), all.end(), j) == all.end()) all.push_back(j);
    }
  }
  for (std::uint64_t j : all)
    if (std::find(principal.begin(), principal.end(), j) == principal.end()) return false;
  return true;
}

std::strong_ordering cmp_int(const Int& a, const Int& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

SemiringPtr Semiring::naturals() {
  static const SemiringPtr s = [] {
    std::shared_ptr<Semiring> r(new Semiring());
    r->carrier_ = Carrier::naturals;
    r->id_ = "nat";
    r->flags_ = {false, true, false, true};
    r->zero_ = Element(0);
    r->one_ = Element(1);
    return r;
  }();
  return s;
}

SemiringPtr Semiring::boolean() {
  static const SemiringPtr s = [] {
    std::shared_ptr<Semiring> r(new Semiring());
    r->carrier_ = Carrier::boolean;
    r->id_ = "bool";
    r->flags_ = {true, true, true, true};
    r->zero_ = Element(0);
    r->one_ = Element(1);
    r->elements_ = {Element(0), Element(1)};
    r->finish_finite();
    r->flags_.principal_friendly = true;
    return r;
  }();
  return s;
}

SemiringPtr Semiring::gcd_naturals() {
  static const SemiringPtr s = [] {
    std::shared_ptr<Semiring> r(new Semiring());
    r->carrier_ = Carrier::gcd_naturals;
    r->id_ = "gcd";
    r->flags_ = {false, true, true, true};
    r->zero_ = Element(0);
    r->one_ = Element(1);
    return r;
  }();
  return s;
}

SemiringPtr Semiring::min_plus(unsigned k) {
  if (k < 1) throw Error("min-plus arity must be positive");
  std::shared_ptr<Semiring> r(new Semiring());
  r->carrier_ = Carrier::min_plus;
  r->id_ = "minplus(" + std::to_string(k) + ")";
  r->dim_ = k;
  r->flags_ = {false, true, true, true};
  r->zero_ = Element::bottom();
  r->one_ = Element(Coords(k, Int(0)));
  return r;
}

SemiringPtr Semiring::divisor_lattice(const Int& n) {
  if (n < 2) throw Error("divisor-lattice modulus must be at least 2");
  auto divs = divisors(n);
  if (divs.size() > FiniteTable::kMaxOrder) throw ResourceLimit("divisor lattice has more than 64 elements");
  std::shared_ptr<Semiring> r(new Semiring());
  r->carrier_ = Carrier::divisor_lattice;
  r->id_ = "divisors(" + to_string(n) + ")";
  r->modulus_ = n;
  r->zero_ = Element(1);
  r->one_ = Element(n);
  for (auto& d : divs) r->elements_.emplace_back(d);
  r->finish_finite();
  r->flags_.principal_friendly = true;
  return r;
}

SemiringPtr Semiring::powerset_lattice(unsigned n) {
  if (n < 1 || n > 6) throw Error("powerset-lattice universe size must be in [1, 6]");
  std::shared_ptr<Semiring> r(new Semiring());
  r->carrier_ = Carrier::powerset_lattice;
  r->id_ = "powerset(" + std::to_string(n) + ")";
  r->dim_ = n;
  r->zero_ = Element(0);
  r->one_ = Element((1ULL << n) - 1);
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 0; m < (1ULL << n); ++m) masks.push_back(m);
  auto members = [](std::uint64_t m) {
    std::vector<int> v;
    for (int i = 0; i < 64; ++i)
      if (m >> i & 1) v.push_back(i);
    return v;
  };
  std::sort(masks.begin(), masks.end(), [&](std::uint64_t a, std::uint64_t b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    return members(a) < members(b);
  });
  r->subset_rank_.resize(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    r->subset_rank_[masks[i]] = i;
    r->elements_.emplace_back(masks[i]);
  }
  r->finish_finite();
  r->flags_.principal_friendly = true;
  return r;
}

SemiringPtr Semiring::finite(FiniteTable table, std::string name) {
  std::shared_ptr<Semiring> r(new Semiring());
  r->carrier_ = Carrier::finite_table;
  r->id_ = std::move(name);
  r->zero_ = Element(table.zero());
  r->one_ = Element(table.one());
  for (std::size_t i = 0; i < table.order(); ++i) r->elements_.emplace_back(i);
  r->flags_.principal_friendly = table_principal(table);
  r->table_ = std::make_shared<const FiniteTable>(std::move(table));
  const bool pf = r->flags_.principal_friendly;
  r->finish_finite();
  r->flags_.principal_friendly = pf;
  return r;
}

SemiringPtr Semiring::fid(SemiringPtr base) {
  if (!base) throw Error("fid needs a base semiring");
  if (base->is_finite())
    throw Unsupported("FId of a finite semiring is built as a table by build_fid");
  std::shared_ptr<Semiring> r(new Semiring());
  r->carrier_ = Carrier::fid;
  r->id_ = "fid(" + base->id() + ")";
  const bool pk = base->prufer_known();
  r->flags_ = {false, pk, pk, pk};
  r->zero_ = Element(std::make_shared<const Ideal>(zero_ideal(base)));
  r->one_ = Element(std::make_shared<const Ideal>(unit_ideal(base)));
  r->base_ = std::move(base);
  return r;
}

void Semiring::finish_finite() {
  flags_.finite = true;
  flags_.membership_exact = true;
  if (!table_) table_ = std::make_shared<const FiniteTable>(to_table(*this));
  flags_.semidomain = true;
  for (const auto& a : elements_)
    if (!is_zero(a) && !is_mc(a)) flags_.semidomain = false;
}

void Semiring::check(const Element& a) const {
  if (!belongs(a)) throw CarrierMismatch("element is not in carrier " + id_);
}

bool Semiring::belongs(const Element& a) const {
  switch (carrier_) {
    case Carrier::naturals:
    case Carrier::gcd_naturals:
      return a.is_int() && a.as_int() >= 0;
    case Carrier::boolean:
      return a.is_int() && (a.as_int() == 0 || a.as_int() == 1);
    case Carrier::finite_table:
      return a.is_int() && a.as_int() >= 0 && a.as_int() < table_->order();
    case Carrier::divisor_lattice:
      return a.is_int() && a.as_int() > 0 && modulus_ % a.as_int() == 0;
    case Carrier::powerset_lattice:
      return a.is_int() && a.as_int() >= 0 && a.as_int() < (Int(1) << dim_);
    case Carrier::min_plus:
      if (a.is_bottom()) return true;
      if (!a.is_coords() || a.coords().size() != dim_) return false;
      return std::all_of(a.coords().begin(), a.coords().end(), [](const Int& x) { return x >= 0; });
    case Carrier::fid:
      return a.is_ideal() && a.ideal_ptr() && same_semiring(*a.ideal().semiring(), *base_);
  }
  return false;
}

Element Semiring::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  switch (carrier_) {
    case Carrier::naturals:
      return a.as_int() + b.as_int();
    case Carrier::gcd_naturals:
      return gcd(a.as_int(), b.as_int());
    case Carrier::boolean:
      return (a.as_int() == 1 || b.as_int() == 1) ? 1 : 0;
    case Carrier::finite_table:
      return Element(table_->add(static_cast<std::size_t>(a.as_int()), static_cast<std::size_t>(b.as_int())));
    case Carrier::divisor_lattice:
      return lcm(a.as_int(), b.as_int());
    case Carrier::powerset_lattice:
      return Element(mask_of(a) | mask_of(b));
    case Carrier::min_plus: {
      if (a.is_bottom()) return b;
      if (b.is_bottom()) return a;
      Coords c(dim_);
      for (unsigned i = 0; i < dim_; ++i) c[i] = std::min(a.coords()[i], b.coords()[i]);
      return Element(std::move(c));
    }
    case Carrier::fid:
      return Element(std::make_shared<const Ideal>(add_ideals(a.ideal(), b.ideal())));
  }
  throw InternalError("unknown carrier");
}

Element Semiring::mul(const Element& a, const Element& b) const {
  check(a);
  check(b);
  switch (carrier_) {
    case Carrier::naturals:
    case Carrier::gcd_naturals:
      return a.as_int() * b.as_int();
    case Carrier::boolean:
      return (a.as_int() == 1 && b.as_int() == 1) ? 1 : 0;
    case Carrier::finite_table:
      return Element(table_->mul(static_cast<std::size_t>(a.as_int()), static_cast<std::size_t>(b.as_int())));
    case Carrier::divisor_lattice:
      return gcd(a.as_int(), b.as_int());
    case Carrier::powerset_lattice:
      return Element(mask_of(a) & mask_of(b));
    case Carrier::min_plus: {
      if (a.is_bottom() || b.is_bottom()) return Element::bottom();
      Coords c(dim_);
      for (unsigned i = 0; i < dim_; ++i) c[i] = a.coords()[i] + b.coords()[i];
      return Element(std::move(c));
    }
    case Carrier::fid:
      return Element(std::make_shared<const Ideal>(mul_ideals(a.ideal(), b.ideal())));
  }
  throw InternalError("unknown carrier");
}

Element Semiring::pow(const Element& a, unsigned e) const {
  Element r = one_;
  for (unsigned i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

bool Semiring::equal(const Element& a, const Element& b) const { return a == b; }

std::strong_ordering Semiring::compare(const Element& a, const Element& b) const {
  switch (carrier_) {
    case Carrier::min_plus: {
      if (a.is_bottom() || b.is_bottom()) {
        if (a.is_bottom() && b.is_bottom()) return std::strong_ordering::equal;
        return a.is_bottom() ? std::strong_ordering::less : std::strong_ordering::greater;
      }
      const auto& x = a.coords();
      const auto& y = b.coords();
      for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i)
        if (auto c = cmp_int(x[i], y[i]); c != 0) return c;
      return x.size() <=> y.size();
    }
    case Carrier::powerset_lattice: {
      auto ra = subset_rank_.at(mask_of(a));
      auto rb = subset_rank_.at(mask_of(b));
      return ra <=> rb;
    }
    case Carrier::fid:
      return compare_ideals(a.ideal(), b.ideal());
    default:
      return cmp_int(a.as_int(), b.as_int());
  }
}

bool Semiring::is_mc(const Element& a) const {
  check(a);
  switch (carrier_) {
    case Carrier::naturals:
    case Carrier::gcd_naturals:
      return a.as_int() != 0;
    case Carrier::min_plus:
      return !a.is_bottom();
    case Carrier::boolean:
    case Carrier::finite_table:
    case Carrier::divisor_lattice:
    case Carrier::powerset_lattice: {
      std::vector<Element> products;
      for (const auto& b : elements_) products.push_back(mul(a, b));
      for (std::size_t i = 0; i < products.size(); ++i)
        for (std::size_t j = i + 1; j < products.size(); ++j)
          if (products[i] == products[j]) return false;
      return true;
    }
    case Carrier::fid: {
      if (a.ideal().is_zero()) return false;
      if (base_->prufer_known()) return true;
      // Bounded cancellation scan over 1- and 2-generated ideals of small elements.
      std::vector<Ideal> probes;
      auto small = base_->probe_elements(6);
      for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = i; j < small.size(); ++j) probes.push_back(mk_ideal(base_, {small[i], small[j]}));
      std::vector<Ideal> products;
      for (const auto& p : probes) products.push_back(mul_ideals(a.ideal(), p));
      for (std::size_t i = 0; i < probes.size(); ++i)
        for (std::size_t j = i + 1; j < probes.size(); ++j)
          if (products[i] == products[j] && !(probes[i] == probes[j])) return false;
      return true;
    }
  }
  return false;
}

bool Semiring::is_unit(const Element& a) const {
  check(a);
  switch (carrier_) {
    case Carrier::naturals:
    case Carrier::gcd_naturals:
      return a.as_int() == 1;
    case Carrier::min_plus:
      return a.is_coords() &&
             std::all_of(a.coords().begin(), a.coords().end(), [](const Int& x) { return x == 0; });
    case Carrier::fid:
      return a.ideal() == unit_ideal(base_);
    default:
      for (const auto& b : elements_)
        if (mul(a, b) == one_) return true;
      return false;
  }
}

bool Semiring::prufer_known() const {
  switch (carrier_) {
    case Carrier::gcd_naturals:
    case Carrier::min_plus:
      return true;
    case Carrier::fid:
      return base_->prufer_known();
    case Carrier::naturals:
      return false;
    default:
      return flags_.semidomain;  // a finite semidomain is a semifield
  }
}

bool Semiring::additively_idempotent() const {
  switch (carrier_) {
    case Carrier::naturals:
      return false;
    case Carrier::finite_table:
      for (const auto& a : elements_)
        if (!(add(a, a) == a)) return false;
      return true;
    default:
      return true;
  }
}

const std::vector<Element>& Semiring::elements() const {
  if (!flags_.finite) throw Unsupported("carrier " + id_ + " is infinite");
  return elements_;
}

std::size_t Semiring::index_of(const Element& a) const {
  check(a);
  switch (carrier_) {
    case Carrier::boolean:
    case Carrier::finite_table:
      return static_cast<std::size_t>(a.as_int());
    case Carrier::powerset_lattice:
      return subset_rank_[mask_of(a)];
    case Carrier::divisor_lattice: {
      auto it = std::lower_bound(elements_.begin(), elements_.end(), a,
                                 [](const Element& x, const Element& y) { return x.as_int() < y.as_int(); });
      return static_cast<std::size_t>(it - elements_.begin());
    }
    default:
      throw Unsupported("carrier " + id_ + " is infinite");
  }
}

std::vector<Element> Semiring::probe_elements(std::int64_t bound) const {
  std::vector<Element> out;
  switch (carrier_) {
    case Carrier::naturals:
    case Carrier::gcd_naturals:
      for (std::int64_t i = 0; i <= bound; ++i) out.emplace_back(i);
      return out;
    case Carrier::min_plus: {
      std::size_t count = 1;
      for (unsigned i = 0; i < dim_; ++i) {
        count *= static_cast<std::size_t>(bound + 1);
        if (count > 200000) throw ResourceLimit("min-plus probe set too large");
      }
      out.push_back(Element::bottom());
      Coords c(dim_, Int(0));
      for (std::size_t n = 0; n < count; ++n) {
        std::size_t rest = n;
        for (unsigned i = 0; i < dim_; ++i) {
          c[dim_ - 1 - i] = static_cast<long long>(rest % static_cast<std::size_t>(bound + 1));
          rest /= static_cast<std::size_t>(bound + 1);
        }
        out.emplace_back(c);
      }
      return out;
    }
    case Carrier::fid: {
      std::vector<Element> seen;
      for (const auto& g : base_->probe_elements(bound)) {
        Element e(std::make_shared<const Ideal>(principal(base_, g)));
        if (std::none_of(seen.begin(), seen.end(), [&](const Element& s) { return s == e; })) seen.push_back(e);
      }
      return seen;
    }
    default:
      return elements_;
  }
}

std::string Semiring::format(const Element& a) const {
  switch (carrier_) {
    case Carrier::min_plus: {
      if (a.is_bottom()) return "bottom";
      std::string s = "(";
      for (std::size_t i = 0; i < a.coords().size(); ++i) s += (i ? "," : "") + to_string(a.coords()[i]);
      return s + ")";
    }
    case Carrier::powerset_lattice: {
      std::string s = "(";
      bool first = true;
      for (unsigned i = 0; i < dim_; ++i) {
        if (mask_of(a) >> i & 1) {
          s += (first ? "" : ",") + std::to_string(i + 1);
          first = false;
        }
      }
      return s + ")";
    }
    case Carrier::fid: {
      const auto& basis = a.ideal().basis();
      std::string s = "<";
      for (std::size_t i = 0; i < basis.size(); ++i) s += (i ? "," : "") + base_->format(basis[i]);
      return s + ">";
    }
    default:
      return to_string(a.as_int());
  }
}

FiniteTable to_table(const Semiring& S) {
  const auto& el = S.elements();
  FiniteTable t(el.size(), S.index_of(S.zero()), S.index_of(S.one()));
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = 0; j < el.size(); ++j) {
      t.set_add(i, j, S.index_of(S.add(el[i], el[j])));
      t.set_mul(i, j, S.index_of(S.mul(el[i], el[j])));
    }
  }
  return t;
}

const std::vector<std::string>& semiring_catalog() {
  static const std::vector<std::string> names = {
      "nat", "bool", "gcd", "minplus(k)", "divisors(n)", "powerset(n)", "fid(<name>)", "table(<path>)"};
  return names;
}

namespace {

std::string catalog_message(const std::string& bad) {
  std::string msg = "unknown semiring '" + bad + "'; catalog:";
  for (const auto& n : semiring_catalog()) msg += " " + n;
  return msg;
}

}  // namespace

SemiringPtr semiring_from_name(const std::string& raw) {
  std::string name = raw;
  std::string param;
  if (auto open = name.find('('); open != std::string::npos) {
    if (name.back() != ')') throw Error(catalog_message(raw));
    param = name.substr(open + 1, name.size() - open - 2);
    name = name.substr(0, open);
  } else if (auto colon = name.find(':'); colon != std::string::npos) {
    param = name.substr(colon + 1);
    name = name.substr(0, colon);
  }
  auto need_param = [&](std::int64_t lo, std::int64_t hi) {
    try {
      Int v = parse_int(param);
      if (v < lo || v > hi) throw Error("");
      return v;
    } catch (const Error&) {
      throw Error("semiring '" + raw + "' needs an integer parameter in [" + std::to_string(lo) + ", " +
                  std::to_string(hi) + "]");
    }
  };
  if (param.empty()) {
    if (name == "nat" || name == "naturals") return Semiring::naturals();
    if (name == "bool" || name == "boolean") return Semiring::boolean();
    if (name == "gcd" || name == "gcd-naturals") return Semiring::gcd_naturals();
  } else {
    if (name == "minplus" || name == "min-plus") return Semiring::min_plus(need_param(1, 16).convert_to<unsigned>());
    if (name == "divisors" || name == "divisor-lattice") return Semiring::divisor_lattice(need_param(2, 1000000000000LL));
    if (name == "powerset" || name == "powerset-lattice")
      return Semiring::powerset_lattice(need_param(1, 6).convert_to<unsigned>());
    if (name == "fid") return Semiring::fid(semiring_from_name(param));
    if (name == "table") return Semiring::finite(read_table_file(param), "table(" + param + ")");
  }
  throw Error(catalog_message(raw));
}

std::vector<Violation> check_axioms_on(const Semiring& S, const std::vector<Element>& elems,
                                       std::size_t triples, std::uint64_t seed) {
  std::vector<Violation> out;
  if (elems.empty()) return out;
  auto report = [&](const char* axiom, std::vector<std::size_t> w) {
    for (const auto& v : out)
      if (v.axiom == axiom) return;
    out.push_back({axiom, std::move(w)});
  };
  if (S.zero() == S.one()) report("zero-ne-one", {});
  Rng rng(seed);
  for (std::size_t t = 0; t < triples; ++t) {
    std::size_t i = rng.below(elems.size()), j = rng.below(elems.size()), k = rng.below(elems.size());
    const auto &a = elems[i], &b = elems[j], &c = elems[k];
    if (!(S.add(a, b) == S.add(b, a))) report("add-commutative", {i, j});
    if (!(S.mul(a, b) == S.mul(b, a))) report("mul-commutative", {i, j});
    if (!(S.add(S.add(a, b), c) == S.add(a, S.add(b, c)))) report("add-associative", {i, j, k});
    if (!(S.mul(S.mul(a, b), c) == S.mul(a, S.mul(b, c)))) report("mul-associative", {i, j, k});
    if (!(S.mul(a, S.add(b, c)) == S.add(S.mul(a, b), S.mul(a, c)))) report("distributive", {i, j, k});
    if (!(S.add(a, S.zero()) == a)) report("add-identity", {i});
    if (!(S.mul(a, S.one()) == a)) report("mul-identity", {i});
    if (!(S.mul(a, S.zero()) == S.zero())) report("absorbing", {i});
  }
  return out;
}

}  // namespace srlab
