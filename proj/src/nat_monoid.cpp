#include "nat_monoid.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "srlab/error.hpp"

namespace srlab::detail {

std::int64_t NatMonoid::conductor() const {
  if (m == 1) return 0;
  return *std::max_element(apery.begin(), apery.end()) - m + 1;
}

std::vector<std::int64_t> NatMonoid::sporadic() const {
  std::vector<std::int64_t> out;
  const std::int64_t c = conductor();
  for (std::int64_t x = 1; x < c; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

std::vector<std::int64_t> NatMonoid::minimal_generators() const {
  std::vector<std::int64_t> ap(apery.begin() + 1, apery.end());
  std::sort(ap.begin(), ap.end());
  std::vector<std::int64_t> gens{m};
  for (std::int64_t w : ap) {
    bool minimal = true;
    for (std::size_t i = 1; i < gens.size() && gens[i] < w; ++i) {
      if (contains(w - gens[i])) {
        minimal = false;
        break;
      }
    }
    if (minimal) gens.push_back(w);
  }
  return gens;
}

std::shared_ptr<const NatMonoid> monoid_from_generators(const std::vector<Int>& raw) {
  if (raw.empty()) throw InternalError("monoid needs generators");
  Int mi = *std::min_element(raw.begin(), raw.end());
  if (mi <= 0) throw InternalError("monoid generators must be positive");
  if (mi > kMaxMultiplicity)
    throw ResourceLimit("numerical monoid multiplicity " + to_string(mi) + " exceeds " +
                        std::to_string(kMaxMultiplicity));
  auto nm = std::make_shared<NatMonoid>();
  nm->m = mi.convert_to<std::int64_t>();
  const std::int64_t m = nm->m;
  // Only the least generator in each residue class can shorten a path.
  std::vector<std::int64_t> best(static_cast<std::size_t>(m), -1);
  for (const Int& g : raw) {
    std::size_t r = static_cast<std::size_t>((g % m).convert_to<std::int64_t>());
    if (r == 0) continue;
    if (g > Int(std::numeric_limits<std::int64_t>::max() / (4 * m)))
      throw ResourceLimit("numerical monoid generator too large");
    std::int64_t gi = g.convert_to<std::int64_t>();
    if (best[r] < 0 || gi < best[r]) best[r] = gi;
  }
  std::vector<std::int64_t> gens;
  for (std::int64_t g : best)
    if (g > 0) gens.push_back(g);

  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> dist(static_cast<std::size_t>(m), inf);
  dist[0] = 0;
  using Item = std::pair<std::int64_t, std::int64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  pq.push({0, 0});
  while (!pq.empty()) {
    auto [d, r] = pq.top();
    pq.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (std::int64_t g : gens) {
      std::int64_t nd = d + g;
      std::size_t nr = static_cast<std::size_t>((r + g) % m);
      if (nd < dist[nr]) {
        dist[nr] = nd;
        pq.push({nd, static_cast<std::int64_t>(nr)});
      }
    }
  }
  for (std::int64_t d : dist)
    if (d == inf) throw InternalError("generators of a numerical monoid must have gcd 1");
  nm->apery = std::move(dist);
  return nm;
}

std::shared_ptr<const NatMonoid> monoid_from_predicate(const std::function<bool(std::int64_t)>& member) {
  std::int64_t m = 1;
  while (!member(m)) {
    if (++m > kMaxMultiplicity) throw ResourceLimit("numerical monoid multiplicity exceeds scan limit");
  }
  auto nm = std::make_shared<NatMonoid>();
  nm->m = m;
  nm->apery.assign(static_cast<std::size_t>(m), -1);
  nm->apery[0] = 0;
  std::int64_t missing = m - 1;
  for (std::int64_t y = m + 1; missing > 0; ++y) {
    if (y > kMaxScan) throw ResourceLimit("numerical monoid scan exceeds limit");
    auto r = static_cast<std::size_t>(y % m);
    if (nm->apery[r] < 0 && member(y)) {
      nm->apery[r] = y;
      --missing;
    }
  }
  return nm;
}

}  // namespace srlab::detail
