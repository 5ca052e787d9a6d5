#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "srlab/expr.hpp"
#include "srlab/semiring.hpp"
#include "srlab/suites.hpp"

namespace srlab {

// Commutative semirings on {0, ..., order-1} with zero 0 and one 1.
struct EnumerationTask {
  std::size_t order = 3;
  // Keep one table per isomorphism class (bijections fixing 0 and 1); the
  // kept table is the lexicographically least relabelling of its class.
  bool prune_isomorphic = true;
  std::uint64_t node_budget = 50'000'000;
  double max_seconds = 0;  // 0: no wall-clock cap
  unsigned threads = 1;
};

struct EnumerationResult {
  std::vector<FiniteTable> tables;  // ascending by cell encoding
  bool partial = false;             // a cap was hit; the list is incomplete
  std::uint64_t nodes = 0;
};

// Backtracking over the free cells with associativity and distributivity
// checked on every partial assignment. Orders 2..6.
EnumerationResult enumerate_semirings(const EnumerationTask& task);

// The lexicographically least relabelling of t under permutations of
// {2, ..., order-1}; two tables are isomorphic iff these agree.
FiniteTable canonical_relabel(const FiniteTable& t);

struct ClassificationRecord {
  std::string id;
  FiniteTable table;
  std::size_t degree = 2;
  bool semidomain = false;
  bool subtractive = false;
  bool weak_gaussian = false;
  // Bounded flags over all coefficient tuples of degree ≤ degree.
  bool gaussian_fails = false;
  bool dm_fails = false;
  // Subtractive yet a Dedekind-Mertens counterexample: a bug, never expected.
  bool violation = false;
  nlohmann::ordered_json counterexamples = nlohmann::ordered_json::object();

  // "holds-up-to(d)", "fails", or for DM on non-subtractive tables without a
  // counterexample, "unresolved-at(d)".
  std::string gaussian_flag() const;
  std::string dm_flag() const;
  nlohmann::ordered_json to_json() const;
};

// Requires a table passing verify_axioms (PreconditionError otherwise).
ClassificationRecord classify(const FiniteTable& t, std::size_t degree, const std::string& id, unsigned threads = 1);

struct ClassificationSweep {
  std::vector<ClassificationRecord> records;
  bool partial = false;
  std::size_t violations = 0;
};
// Enumerates, then classifies each table (in parallel, merged in order).
ClassificationSweep classify_all(const EnumerationTask& task, std::size_t degree);

struct FalsifyCounterexample {
  std::string semiring;
  // "probe": principal ideals of small elements; "sample": random ideals.
  std::string phase;
  std::uint64_t index = 0;
  std::vector<std::pair<std::string, Ideal>> assignment;
  Verification verification;

  nlohmann::ordered_json to_json() const;
};

// Searches for an assignment of I, J, K violating the comparison `e`. Per
// carrier, in the order given: first every triple of principal ideals on the
// first six probe elements (graded by the largest index, then
// lexicographically), then sampler.samples random triples. Returns the first
// violation in that order, independent of sampler.threads.
// PreconditionError if `e` is not a comparison or uses other variables.
std::optional<FalsifyCounterexample> falsify(const Expr& e, const std::vector<SemiringPtr>& carriers,
                                             const Sampler& sampler);

}  // namespace srlab
