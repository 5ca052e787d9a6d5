#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "srlab/ideal.hpp"

namespace srlab {

// Ideal algebra expressions:
//
//   expr   := cmp
//   cmp    := sum (("==" | "<=") sum)?
//   sum    := term ("+" term)*
//   term   := factor (("*" | "^" | ":") factor)*
//   factor := ideal | "(" expr ")"
//   ideal  := "<" elem ("," elem)* ">" | VAR
//   elem   := INT | "(" INT ("," INT)* ")" | "bottom"
//
// "+" sum, "*" product, "^" intersection, ":" colon, "==" equality, "<="
// inclusion. Binary operators are left-associative.

// An element literal, interpreted by the carrier at evaluation time.
struct ElemLit {
  enum class Kind { integer, tuple, bottom };
  Kind kind = Kind::integer;
  std::vector<Int> values;  // one value for integer, the coordinates for tuple

  friend bool operator==(const ElemLit&, const ElemLit&) = default;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Op { ideal, var, sum, product, intersect, colon, equals, subset };
  Op op = Op::ideal;
  std::vector<ElemLit> gens;  // ideal
  std::string name;           // var
  ExprPtr lhs, rhs;           // binary operators

  bool is_comparison() const { return op == Op::equals || op == Op::subset; }
};

bool operator==(const Expr& a, const Expr& b);

// Throws ParseError with 1-based line/column and the expected-token set.
ExprPtr parse_expr(const std::string& input);
// Minimal parentheses; parse_expr(print_expr(e)) equals e.
std::string print_expr(const Expr& e);

// Variable names in order of first appearance.
std::vector<std::string> expr_variables(const Expr& e);

using Env = std::map<std::string, Ideal>;

struct EvalResult {
  std::variant<Ideal, bool> value;
  Verification verification;

  bool is_bool() const { return std::holds_alternative<bool>(value); }
  bool truth() const { return std::get<bool>(value); }
  const Ideal& ideal() const { return std::get<Ideal>(value); }
};

// Maps a literal onto S: integers on the integer carriers (a subset bitmask
// on powerset, an index on tables), tuples and bottom on min-plus, tuples of
// 1-based members on powerset. CarrierMismatch if S has no such element.
Element literal_element(const SemiringPtr& S, const ElemLit& lit);

// Bottom-up evaluation. Throws Error on an unbound variable, CarrierMismatch
// on a binding from another carrier or an invalid literal, and Error when a
// comparison is used as an ideal operand.
EvalResult eval_expr(const Expr& e, const SemiringPtr& S, const Env& env = {});

}  // namespace srlab
