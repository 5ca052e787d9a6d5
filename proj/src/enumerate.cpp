#include "srlab/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "srlab/error.hpp"
#include "srlab/parallel.hpp"
#include "srlab/polynomial.hpp"
#include "srlab/suites.hpp"

namespace srlab {

namespace {

constexpr std::uint8_t kUnset = 0xFF;

std::vector<std::uint8_t> encode(const FiniteTable& t) {
  std::vector<std::uint8_t> code = t.add_cells();
  code.insert(code.end(), t.mul_cells().begin(), t.mul_cells().end());
  return code;
}

FiniteTable relabel(const FiniteTable& t, const std::vector<std::size_t>& pi) {
  const std::size_t n = t.order();
  FiniteTable r(n, pi[t.zero()], pi[t.one()]);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      r.set_add(pi[a], pi[b], pi[t.add(a, b)]);
      r.set_mul(pi[a], pi[b], pi[t.mul(a, b)]);
    }
  return r;
}

bool is_canonical(const FiniteTable& t) {
  const auto own = encode(t);
  std::vector<std::size_t> pi(t.order());
  std::iota(pi.begin(), pi.end(), 0);
  while (std::next_permutation(pi.begin() + 2, pi.end()))
    if (encode(relabel(t, pi)) < own) return false;
  return true;
}

struct Cell {
  bool mul;
  std::size_t a, b;
};

class Search {
 public:
  using Clock = std::chrono::steady_clock;

  Search(std::size_t n, bool prune, std::uint64_t budget, std::optional<Clock::time_point> deadline)
      : n_(n), prune_(prune), budget_(budget), deadline_(deadline), add_(n * n, kUnset), mul_(n * n, kUnset) {
    for (std::size_t x = 0; x < n; ++x) {
      put(false, 0, x, x);
      put(true, 0, x, 0);
      put(true, 1, x, x);
    }
    for (std::size_t a = 1; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) cells_.push_back({false, a, b});
    for (std::size_t a = 2; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) cells_.push_back({true, a, b});
  }

  // Explores the subtree where the first free cell holds `first`.
  void run(std::size_t first) {
    const Cell& c = cells_[0];
    put(c.mul, c.a, c.b, first);
    if (consistent()) dfs(1);
  }

  std::vector<FiniteTable>& found() { return found_; }
  bool partial() const { return partial_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint8_t A(std::size_t a, std::size_t b) const { return add_[a * n_ + b]; }
  std::uint8_t M(std::size_t a, std::size_t b) const { return mul_[a * n_ + b]; }

  void put(bool mul, std::size_t a, std::size_t b, std::size_t v) {
    auto& cells = mul ? mul_ : add_;
    cells[a * n_ + b] = cells[b * n_ + a] = static_cast<std::uint8_t>(v);
  }

  // Associativity of both operations and distributivity, on every triple
  // whose cells are all assigned.
  bool consistent() const {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        for (std::size_t c = 0; c < n_; ++c) {
          const std::uint8_t ab = A(a, b), bc = A(b, c);
          if (ab != kUnset && bc != kUnset) {
            const std::uint8_t l = A(ab, c), r = A(a, bc);
            if (l != kUnset && r != kUnset && l != r) return false;
          }
          const std::uint8_t mab = M(a, b), mbc = M(b, c);
          if (mab != kUnset && mbc != kUnset) {
            const std::uint8_t l = M(mab, c), r = M(a, mbc);
            if (l != kUnset && r != kUnset && l != r) return false;
          }
          const std::uint8_t mac = M(a, c);
          if (bc != kUnset && mab != kUnset && mac != kUnset) {
            const std::uint8_t l = M(a, bc), r = A(mab, mac);
            if (l != kUnset && r != kUnset && l != r) return false;
          }
        }
    return true;
  }

  void dfs(std::size_t k) {
    if (partial_) return;
    if (++nodes_ > budget_ || (deadline_ && (nodes_ & 1023) == 0 && Clock::now() > *deadline_)) {
      partial_ = true;
      return;
    }
    if (k == cells_.size()) {
      FiniteTable t(n_, 0, 1);
      for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b) {
          t.set_add(a, b, A(a, b));
          t.set_mul(a, b, M(a, b));
        }
      if (auto v = verify_axioms(t); !v.empty()) throw InternalError("enumerated table violates " + v.front().axiom);
      if (!prune_ || is_canonical(t)) found_.push_back(std::move(t));
      return;
    }
    const Cell& c = cells_[k];
    for (std::size_t v = 0; v < n_; ++v) {
      put(c.mul, c.a, c.b, v);
      if (consistent()) dfs(k + 1);
    }
    put(c.mul, c.a, c.b, kUnset);
  }

  std::size_t n_;
  bool prune_;
  std::uint64_t budget_;
  std::optional<Clock::time_point> deadline_;
  std::vector<std::uint8_t> add_, mul_;
  std::vector<Cell> cells_;
  std::vector<FiniteTable> found_;
  bool partial_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

FiniteTable canonical_relabel(const FiniteTable& t) {
  FiniteTable best = t;
  auto best_code = encode(t);
  std::vector<std::size_t> pi(t.order());
  std::iota(pi.begin(), pi.end(), 0);
  while (std::next_permutation(pi.begin() + 2, pi.end())) {
    auto r = relabel(t, pi);
    auto code = encode(r);
    if (code < best_code) {
      best_code = std::move(code);
      best = std::move(r);
    }
  }
  return best;
}

EnumerationResult enumerate_semirings(const EnumerationTask& task) {
  const std::size_t n = task.order;
  if (n < 2 || n > 6) throw PreconditionError("enumeration order must be in 2..6, got " + std::to_string(n));
  std::optional<Search::Clock::time_point> deadline;
  if (task.max_seconds > 0)
    deadline = Search::Clock::now() + std::chrono::duration_cast<Search::Clock::duration>(
                                          std::chrono::duration<double>(task.max_seconds));
  // One branch per value of the first free cell, add(1,1). Each branch gets
  // an equal share of the budget, so truncation does not depend on threads.
  std::vector<Search> branches;
  for (std::size_t v = 0; v < n; ++v) branches.emplace_back(n, task.prune_isomorphic, task.node_budget / n, deadline);
  parallel_for(n, task.threads, [&](std::size_t v) { branches[v].run(v); });

  EnumerationResult r;
  for (auto& b : branches) {
    r.partial = r.partial || b.partial();
    r.nodes += b.nodes();
    for (auto& t : b.found()) r.tables.push_back(std::move(t));
  }
  std::sort(r.tables.begin(), r.tables.end(),
            [](const FiniteTable& x, const FiniteTable& y) { return encode(x) < encode(y); });
  return r;
}

std::string ClassificationRecord::gaussian_flag() const {
  return gaussian_fails ? "fails" : "holds-up-to(" + std::to_string(degree) + ")";
}

std::string ClassificationRecord::dm_flag() const {
  if (dm_fails) return "fails";
  if (subtractive) return "holds-up-to(" + std::to_string(degree) + ")";
  return "unresolved-at(" + std::to_string(degree) + ")";
}

nlohmann::ordered_json ClassificationRecord::to_json() const {
  nlohmann::ordered_json j;
  j["id"] = id;
  j["order"] = table.order();
  j["semidomain"] = semidomain;
  j["subtractive"] = subtractive;
  j["weak_gaussian"] = weak_gaussian;
  j["gaussian"] = gaussian_flag();
  j["dm"] = dm_flag();
  j["violation"] = violation;
  j["counterexamples"] = counterexamples;
  j["table"] = format_table(table);
  return j;
}

ClassificationRecord classify(const FiniteTable& t, std::size_t degree, const std::string& id, unsigned threads) {
  if (!verify_axioms(t).empty()) throw PreconditionError("classify needs a verified table");
  auto S = Semiring::finite(t, id);
  ClassificationRecord r;
  r.id = id;
  r.table = t;
  r.degree = degree;
  r.semidomain = S->flags().semidomain;

  r.subtractive = true;
  for (const auto& I : enumerate_ideals(S, FiniteTable::kMaxOrder))
    if (!is_subtractive(I).value) {
      r.subtractive = false;
      r.counterexamples["subtractive"] = format(I);
      break;
    }
  if (auto p = non_subtractive_prime(S)) {
    r.weak_gaussian = false;
    r.counterexamples["weak_gaussian"] = format(*p);
  } else {
    r.weak_gaussian = true;
  }
  auto g = gaussian_search(S, degree, 0, threads);
  if (g.found) {
    r.gaussian_fails = true;
    r.counterexamples["gaussian"] = g.to_json();
  }
  auto d = dm_search(S, degree, 0, threads);
  if (d.found) {
    r.dm_fails = true;
    r.counterexamples["dm"] = d.to_json();
  }
  r.violation = r.subtractive && r.dm_fails;
  return r;
}

ClassificationSweep classify_all(const EnumerationTask& task, std::size_t degree) {
  auto e = enumerate_semirings(task);
  ClassificationSweep s;
  s.partial = e.partial;
  s.records.resize(e.tables.size());
  parallel_for(e.tables.size(), task.threads, [&](std::size_t i) {
    std::string id = "n" + std::to_string(task.order) + "-" + std::to_string(i);
    s.records[i] = classify(e.tables[i], degree, id);
  });
  for (const auto& r : s.records) s.violations += r.violation;
  return s;
}

}  // namespace srlab
