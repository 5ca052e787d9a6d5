#pragma once

#include <initializer_list>
#include <memory>
#include <variant>
#include <vector>

#include "srlab/integer.hpp"

namespace srlab {

class Ideal;
using IdealPtr = std::shared_ptr<const Ideal>;

// Additive identity of min-plus carriers.
struct Bottom {
  friend bool operator==(Bottom, Bottom) { return true; }
};

using Coords = std::vector<Int>;

// A carrier element. The active alternative depends on the carrier:
//   Int    naturals, gcd-naturals, boolean (0/1), table index, divisor, subset bitmask
//   Coords min-plus tuple
//   Bottom min-plus additive identity
//   IdealPtr  element of FId(base): a canonical ideal of the base semiring
// Which alternative is legal is checked by Semiring::check, not here.
class Element {
 public:
  using Value = std::variant<Int, Coords, Bottom, IdealPtr>;

  Element() : value_(Int(0)) {}
  Element(Int v) : value_(std::move(v)) {}
  Element(int v) : value_(Int(v)) {}
  Element(long v) : value_(Int(v)) {}
  Element(long long v) : value_(Int(v)) {}
  Element(unsigned long v) : value_(Int(v)) {}
  Element(unsigned long long v) : value_(Int(v)) {}
  Element(Coords c) : value_(std::move(c)) {}
  Element(Bottom b) : value_(b) {}
  explicit Element(IdealPtr i) : value_(std::move(i)) {}

  static Element bottom() { return Element(Bottom{}); }
  static Element tuple(std::initializer_list<long long> xs);

  bool is_int() const { return std::holds_alternative<Int>(value_); }
  bool is_coords() const { return std::holds_alternative<Coords>(value_); }
  bool is_bottom() const { return std::holds_alternative<Bottom>(value_); }
  bool is_ideal() const { return std::holds_alternative<IdealPtr>(value_); }

  const Int& as_int() const { return std::get<Int>(value_); }
  const Coords& coords() const { return std::get<Coords>(value_); }
  const Ideal& ideal() const { return *std::get<IdealPtr>(value_); }
  const IdealPtr& ideal_ptr() const { return std::get<IdealPtr>(value_); }

  const Value& value() const { return value_; }

  // Structural equality; ideal-valued elements compare by canonical form.
  friend bool operator==(const Element& a, const Element& b);

 private:
  Value value_;
};

}  // namespace srlab
