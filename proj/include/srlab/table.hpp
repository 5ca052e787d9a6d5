#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace srlab {

// Operation tables of a finite commutative semiring on {0, ..., order-1}.
class FiniteTable {
 public:
  static constexpr std::size_t kMaxOrder = 64;

  FiniteTable() = default;
  // Tables initialised with every cell equal to `zero`.
  FiniteTable(std::size_t order, std::size_t zero, std::size_t one);
  // Throws srlab::Error on malformed dimensions or out-of-range entries.
  FiniteTable(std::size_t zero, std::size_t one, const std::vector<std::vector<std::size_t>>& add,
              const std::vector<std::vector<std::size_t>>& mul);

  std::size_t order() const { return order_; }
  std::size_t zero() const { return zero_; }
  std::size_t one() const { return one_; }

  std::size_t add(std::size_t a, std::size_t b) const { return add_[a * order_ + b]; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * order_ + b]; }
  void set_add(std::size_t a, std::size_t b, std::size_t v) { add_[a * order_ + b] = static_cast<std::uint8_t>(v); }
  void set_mul(std::size_t a, std::size_t b, std::size_t v) { mul_[a * order_ + b] = static_cast<std::uint8_t>(v); }

  const std::vector<std::uint8_t>& add_cells() const { return add_; }
  const std::vector<std::uint8_t>& mul_cells() const { return mul_; }

  friend bool operator==(const FiniteTable&, const FiniteTable&) = default;

 private:
  std::size_t order_ = 0;
  std::size_t zero_ = 0;
  std::size_t one_ = 0;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
};

// Smallest ideal containing the elements of `mask` (bit i = element i):
// closed under addition and under multiplication by every element.
std::uint64_t ideal_closure(const FiniteTable& t, std::uint64_t mask);

struct Violation {
  std::string axiom;
  std::vector<std::size_t> witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Exhaustive check of the commutative semiring axioms; empty iff all hold.
// Axiom names: zero-ne-one, add-commutative, add-associative, add-identity,
// mul-commutative, mul-associative, mul-identity, distributive, absorbing.
// Each axiom reports its first witness in lexicographic order only.
std::vector<Violation> verify_axioms(const FiniteTable& t);

nlohmann::ordered_json to_json(const Violation& v);
nlohmann::ordered_json to_json(const std::vector<Violation>& vs);

// Text format:
//   order n
//   zero i
//   one j
//   n rows of the addition table, then n rows of the multiplication table.
FiniteTable parse_table(std::string_view text);
FiniteTable read_table_file(const std::string& path);
std::string format_table(const FiniteTable& t);

}  // namespace srlab
