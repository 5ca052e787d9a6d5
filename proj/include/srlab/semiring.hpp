#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "srlab/element.hpp"
#include "srlab/table.hpp"

namespace srlab {

enum class Carrier {
  naturals,
  boolean,
  gcd_naturals,
  min_plus,
  finite_table,
  divisor_lattice,
  powerset_lattice,
  fid,
};

struct SemiringFlags {
  bool finite = false;
  bool semidomain = false;
  bool principal_friendly = false;
  bool membership_exact = false;

  friend bool operator==(const SemiringFlags&, const SemiringFlags&) = default;
};

class Semiring;
using SemiringPtr = std::shared_ptr<const Semiring>;

// An immutable concrete carrier together with its operations.
//
// gcd-naturals encodes Id(Z): the value n stands for the ideal nZ, so
// addition is gcd (with gcd(x, 0) = x) and multiplication is the integer
// product. divisor-lattice(n) has zero = 1 and one = n.
class Semiring : public std::enable_shared_from_this<Semiring> {
 public:
  static SemiringPtr naturals();
  static SemiringPtr boolean();
  static SemiringPtr gcd_naturals();
  static SemiringPtr min_plus(unsigned k);
  static SemiringPtr divisor_lattice(const Int& n);
  static SemiringPtr powerset_lattice(unsigned n);
  // Flags are computed from the tables; axioms are not checked here.
  static SemiringPtr finite(FiniteTable table, std::string name);
  // FId(base) for an infinite base. Finite bases go through build_fid.
  static SemiringPtr fid(SemiringPtr base);

  Carrier carrier() const { return carrier_; }
  const std::string& id() const { return id_; }
  const SemiringFlags& flags() const { return flags_; }
  bool is_finite() const { return flags_.finite; }

  // min-plus arity k, or powerset universe size n.
  unsigned dimension() const { return dim_; }
  // divisor-lattice modulus n.
  const Int& modulus() const { return modulus_; }
  const FiniteTable& table() const { return *table_; }
  const SemiringPtr& base() const { return base_; }

  const Element& zero() const { return zero_; }
  const Element& one() const { return one_; }

  Element add(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, unsigned e) const;

  bool equal(const Element& a, const Element& b) const;
  // Generator order: integers numerically, tuples lexicographically
  // (bottom first), subsets by size then lexicographically.
  std::strong_ordering compare(const Element& a, const Element& b) const;

  // Throws CarrierMismatch if `a` is not an element of this carrier.
  void check(const Element& a) const;
  bool belongs(const Element& a) const;

  bool is_zero(const Element& a) const { return equal(a, zero_); }
  bool is_mc(const Element& a) const;
  bool is_unit(const Element& a) const;

  // Every nonzero finitely generated ideal is known to be invertible:
  // gcd-naturals, min-plus(k), finite semifields, and FId of those.
  bool prufer_known() const;
  bool additively_idempotent() const;

  // Finite carriers only: all elements in `compare` order.
  const std::vector<Element>& elements() const;
  std::size_t index_of(const Element& a) const;

  // Elements of bounded size, used by bounded scans: integers 0..bound,
  // min-plus tuples with coordinates in 0..bound plus bottom, all elements
  // of finite carriers, principal ideals of probe elements for FId.
  std::vector<Element> probe_elements(std::int64_t bound) const;

  std::string format(const Element& a) const;

 private:
  Semiring() = default;
  void finish_finite();

  Carrier carrier_ = Carrier::naturals;
  std::string id_;
  SemiringFlags flags_;
  unsigned dim_ = 0;
  Int modulus_ = 0;
  std::shared_ptr<const FiniteTable> table_;
  SemiringPtr base_;
  Element zero_;
  Element one_;
  std::vector<Element> elements_;
  std::vector<std::size_t> subset_rank_;  // powerset mask -> position in elements_
};

inline bool same_semiring(const Semiring& a, const Semiring& b) { return a.id() == b.id(); }

// The carrier as an explicit table, indexed like S.elements().
FiniteTable to_table(const Semiring& S);

// Parses a catalog name: nat, bool, gcd, minplus(k), divisors(n),
// powerset(n), fid(<name>), table(<path>). `name:param` is accepted for
// `name(param)`. Throws srlab::Error listing the catalog on failure.
SemiringPtr semiring_from_name(const std::string& name);
const std::vector<std::string>& semiring_catalog();

// Violations found by checking the axioms on sampled triples (a, b, c)
// drawn from `elems`; witness indexes refer to `elems`.
std::vector<Violation> check_axioms_on(const Semiring& S, const std::vector<Element>& elems,
                                       std::size_t triples, std::uint64_t seed);

}  // namespace srlab
