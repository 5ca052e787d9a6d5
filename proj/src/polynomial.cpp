#include "srlab/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <iterator>

#include "srlab/error.hpp"
#include "srlab/parallel.hpp"

namespace srlab {

Polynomial::Polynomial(SemiringPtr S, std::vector<Element> coeffs) : ring_(std::move(S)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) ring_->check(c);
  while (!coeffs_.empty() && ring_->is_zero(coeffs_.back())) coeffs_.pop_back();
}

std::size_t Polynomial::degree() const {
  if (coeffs_.empty()) throw PreconditionError("the zero polynomial has no degree");
  return coeffs_.size() - 1;
}

std::string Polynomial::str() const {
  std::string s = "poly[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) s += (i ? "," : "") + ring_->format(coeffs_[i]);
  return s + "]";
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
  if (!same_semiring(*f.semiring(), *g.semiring())) throw CarrierMismatch("polynomials over different semirings");
  const auto& S = *f.semiring();
  if (f.is_zero() || g.is_zero()) return Polynomial(f.semiring(), {});
  std::vector<Element> c(f.coeffs().size() + g.coeffs().size() - 1, S.zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) c[i + j] = S.add(c[i + j], S.mul(f.coeffs()[i], g.coeffs()[j]));
  return Polynomial(f.semiring(), std::move(c));
}

namespace {

// Content with the zero polynomial mapped to the zero ideal; products of
// nonzero polynomials can vanish outside semidomains.
Ideal content_any(const Polynomial& f) {
  if (f.is_zero()) return zero_ideal(f.semiring());
  return mk_ideal(f.semiring(), f.coeffs());
}

}  // namespace

Ideal content(const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("content of the zero polynomial");
  return content_any(f);
}

GaussianResult gaussian_pair(const Polynomial& f, const Polynomial& g) {
  auto cfg = content_any(poly_mul(f, g));
  auto prod = mul_ideals(content(f), content(g));
  if (!is_subset(cfg, prod)) throw InternalError("c(fg) ⊄ c(f)c(g) for " + f.str() + ", " + g.str());
  for (const auto& b : prod.basis())
    if (!contains(cfg, b)) return {false, b};
  return {true, std::nullopt};
}

DmResult dm_pair(const Polynomial& f, const Polynomial& g) {
  const std::size_t m = g.degree();
  auto cf = content(f);
  auto cfm = pow(cf, static_cast<unsigned>(m));
  auto lhs = mul_ideals(mul_ideals(cfm, cf), content(g));
  auto rhs = mul_ideals(cfm, content_any(poly_mul(f, g)));
  auto sep = separating_element(lhs, rhs);
  return {!sep, m, sep};
}

bool ab_in_squares(const SemiringPtr& S, const Element& a, const Element& b) {
  return contains(mk_ideal(S, {S->mul(a, a), S->mul(b, b)}), S->mul(a, b));
}

nlohmann::ordered_json SearchResult::to_json() const {
  nlohmann::ordered_json j;
  j["found"] = found;
  j["f"] = f ? nlohmann::ordered_json(f->str()) : nlohmann::ordered_json(nullptr);
  j["g"] = g ? nlohmann::ordered_json(g->str()) : nlohmann::ordered_json(nullptr);
  j["witness"] = witness && f ? nlohmann::ordered_json(f->semiring()->format(*witness)) : nlohmann::ordered_json(nullptr);
  j["checked_count"] = checked_count;
  j["space"] = space;
  return j;
}

std::vector<Element> coefficient_range(const SemiringPtr& S, std::int64_t bound) {
  if (S->is_finite()) return S->elements();
  if (S->carrier() == Carrier::fid) throw Unsupported("coefficient enumeration over " + S->id());
  return S->probe_elements(bound);
}

std::vector<Polynomial> polynomials_of_degree(const SemiringPtr& S, const std::vector<Element>& range, std::size_t d) {
  std::vector<Element> nonzero;
  for (const auto& x : range)
    if (!S->is_zero(x)) nonzero.push_back(x);
  std::vector<Polynomial> out;
  std::vector<std::size_t> idx(d + 1, 0);
  if (range.empty() || nonzero.empty()) return out;
  while (true) {
    std::vector<Element> c;
    for (std::size_t i = 0; i < d; ++i) c.push_back(range[idx[i]]);
    c.push_back(nonzero[idx[d]]);
    out.emplace_back(S, std::move(c));
    // Odometer with c0 most significant.
    std::size_t pos = d + 1;
    while (pos > 0) {
      --pos;
      const std::size_t limit = pos == d ? nonzero.size() : range.size();
      if (++idx[pos] < limit) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

namespace {

using PairLaw = std::function<std::optional<std::optional<Element>>(const Polynomial&, const Polynomial&)>;

SearchResult run_search(const SemiringPtr& S, std::size_t max_deg, std::int64_t bound, unsigned threads,
                        std::uint64_t max_pairs, const PairLaw& fails) {
  auto range = coefficient_range(S, bound);
  std::vector<std::vector<Polynomial>> by_deg;
  for (std::size_t d = 0; d <= max_deg; ++d) by_deg.push_back(polynomials_of_degree(S, range, d));

  struct Block {
    std::size_t df, dg;
    std::uint64_t offset, size;
  };
  std::vector<Block> blocks;
  std::uint64_t total = 0;
  for (std::size_t D = 0; D <= 2 * max_deg; ++D) {
    for (std::size_t df = 0; df <= max_deg; ++df) {
      if (D < df || D - df > max_deg) continue;
      const std::size_t dg = D - df;
      std::uint64_t size = by_deg[df].size() * by_deg[dg].size();
      blocks.push_back({df, dg, total, size});
      total += size;
    }
  }
  auto pair_at = [&](std::uint64_t i) {
    auto it = std::upper_bound(blocks.begin(), blocks.end(), i,
                               [](std::uint64_t x, const Block& b) { return x < b.offset; });
    const Block& b = *std::prev(it);
    const std::uint64_t local = i - b.offset;
    const auto& G = by_deg[b.dg];
    return std::pair<const Polynomial&, const Polynomial&>(by_deg[b.df][local / G.size()], G[local % G.size()]);
  };
  // Only the first max_pairs pairs are scanned; running out of budget
  // without a hit is an error rather than a silent "none found".
  const std::uint64_t scanned = std::min(total, max_pairs);
  auto first = find_first(scanned, threads, [&](std::size_t i) {
    auto [f, g] = pair_at(i);
    return fails(f, g).has_value();
  });

  SearchResult r;
  r.space = total;
  if (!first) {
    if (scanned < total)
      throw ResourceLimit("no counterexample among the first " + std::to_string(max_pairs) + " of " +
                          std::to_string(total) + " pairs");
    r.checked_count = total;
    return r;
  }
  auto [f, g] = pair_at(*first);
  r.found = true;
  r.f = f;
  r.g = g;
  r.witness = *fails(f, g);
  r.checked_count = *first + 1;
  return r;
}

}  // namespace

SearchResult gaussian_search(const SemiringPtr& S, std::size_t max_deg, std::int64_t coeff_bound, unsigned threads,
                             std::uint64_t max_pairs) {
  return run_search(S, max_deg, coeff_bound, threads, max_pairs,
                    [](const Polynomial& f, const Polynomial& g) -> std::optional<std::optional<Element>> {
                      auto r = gaussian_pair(f, g);
                      if (r.holds) return std::nullopt;
                      return r.witness;
                    });
}

SearchResult dm_search(const SemiringPtr& S, std::size_t max_deg, std::int64_t coeff_bound, unsigned threads,
                       std::uint64_t max_pairs) {
  return run_search(S, max_deg, coeff_bound, threads, max_pairs,
                    [](const Polynomial& f, const Polynomial& g) -> std::optional<std::optional<Element>> {
                      auto r = dm_pair(f, g);
                      if (r.holds) return std::nullopt;
                      return r.witness;
                    });
}

}  // namespace srlab
