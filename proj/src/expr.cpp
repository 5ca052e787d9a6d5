#include "srlab/expr.hpp"

#include <algorithm>
#include <cctype>

#include "srlab/error.hpp"

namespace srlab {

namespace {

enum class Tok { integer, ident, lt, gt, lparen, rparen, comma, plus, star, caret, colon, eq, le, end };

const char* describe(Tok t) {
  switch (t) {
    case Tok::integer: return "integer";
    case Tok::ident: return "variable";
    case Tok::lt: return "'<'";
    case Tok::gt: return "'>'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::comma: return "','";
    case Tok::plus: return "'+'";
    case Tok::star: return "'*'";
    case Tok::caret: return "'^'";
    case Tok::colon: return "':'";
    case Tok::eq: return "'=='";
    case Tok::le: return "'<='";
    case Tok::end: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, column;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t k) {
    for (; k > 0; --k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t{Tok::end, "", line, col};
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.kind = Tok::integer;
      t.text = s.substr(i, j - i);
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      t.kind = Tok::ident;
      t.text = s.substr(i, j - i);
      advance(j - i);
    } else if (c == '=' && i + 1 < s.size() && s[i + 1] == '=') {
      t.kind = Tok::eq;
      advance(2);
    } else if (c == '<' && i + 1 < s.size() && s[i + 1] == '=') {
      t.kind = Tok::le;
      advance(2);
    } else {
      switch (c) {
        case '<': t.kind = Tok::lt; break;
        case '>': t.kind = Tok::gt; break;
        case '(': t.kind = Tok::lparen; break;
        case ')': t.kind = Tok::rparen; break;
        case ',': t.kind = Tok::comma; break;
        case '+': t.kind = Tok::plus; break;
        case '*': t.kind = Tok::star; break;
        case '^': t.kind = Tok::caret; break;
        case ':': t.kind = Tok::colon; break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", line, col);
      }
      advance(1);
    }
    out.push_back(std::move(t));
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

ExprPtr binary(Expr::Op op, ExprPtr l, ExprPtr r) {
  auto e = std::make_shared<Expr>();
  e->op = op;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  return e;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprPtr parse() {
    auto e = expr();
    expect({Tok::end});
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }

  [[noreturn]] void fail(std::vector<Tok> expected) const {
    std::vector<std::string> names;
    for (Tok t : expected) names.push_back(describe(t));
    std::string msg = "expected ";
    for (std::size_t i = 0; i < names.size(); ++i) msg += (i ? (i + 1 == names.size() ? " or " : ", ") : "") + names[i];
    msg += std::string(", found ") + (at(Tok::end) ? "end of input" : "'" + tok_text(peek()) + "'");
    throw ParseError(msg, peek().line, peek().column, std::move(names));
  }

  static std::string tok_text(const Token& t) {
    if (!t.text.empty()) return t.text;
    std::string d = describe(t.kind);
    return d.substr(1, d.size() - 2);
  }

  Token expect(std::vector<Tok> kinds) {
    if (std::find(kinds.begin(), kinds.end(), peek().kind) == kinds.end()) fail(kinds);
    return toks_[pos_++];
  }

  ExprPtr expr() {
    auto l = sum();
    if (at(Tok::eq) || at(Tok::le)) {
      const auto op = toks_[pos_++].kind == Tok::eq ? Expr::Op::equals : Expr::Op::subset;
      return binary(op, l, sum());
    }
    return l;
  }

  ExprPtr sum() {
    auto l = term();
    while (at(Tok::plus)) {
      ++pos_;
      l = binary(Expr::Op::sum, l, term());
    }
    return l;
  }

  ExprPtr term() {
    auto l = factor();
    for (;;) {
      Expr::Op op;
      if (at(Tok::star))
        op = Expr::Op::product;
      else if (at(Tok::caret))
        op = Expr::Op::intersect;
      else if (at(Tok::colon))
        op = Expr::Op::colon;
      else
        return l;
      ++pos_;
      l = binary(op, l, factor());
    }
  }

  ExprPtr factor() {
    if (at(Tok::lparen)) {
      ++pos_;
      auto e = expr();
      expect({Tok::rparen});
      return e;
    }
    if (at(Tok::ident)) {
      if (peek().text == "bottom") fail({Tok::lt, Tok::lparen, Tok::ident});
      auto e = std::make_shared<Expr>();
      e->op = Expr::Op::var;
      e->name = toks_[pos_++].text;
      return e;
    }
    expect({Tok::lt, Tok::lparen, Tok::ident});
    auto e = std::make_shared<Expr>();
    e->op = Expr::Op::ideal;
    e->gens.push_back(elem());
    while (at(Tok::comma)) {
      ++pos_;
      e->gens.push_back(elem());
    }
    expect({Tok::comma, Tok::gt});
    return e;
  }

  ElemLit elem() {
    ElemLit lit;
    if (at(Tok::ident) && peek().text == "bottom") {
      ++pos_;
      lit.kind = ElemLit::Kind::bottom;
      return lit;
    }
    if (at(Tok::lparen)) {
      ++pos_;
      lit.kind = ElemLit::Kind::tuple;
      lit.values.push_back(parse_int(expect({Tok::integer}).text));
      while (at(Tok::comma)) {
        ++pos_;
        lit.values.push_back(parse_int(expect({Tok::integer}).text));
      }
      expect({Tok::comma, Tok::rparen});
      return lit;
    }
    if (!at(Tok::integer)) fail({Tok::integer, Tok::lparen, Tok::ident});
    lit.values.push_back(parse_int(toks_[pos_++].text));
    return lit;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(Expr::Op op) {
  switch (op) {
    case Expr::Op::equals:
    case Expr::Op::subset: return 0;
    case Expr::Op::sum: return 1;
    case Expr::Op::product:
    case Expr::Op::intersect:
    case Expr::Op::colon: return 2;
    default: return 3;
  }
}

std::string print_lit(const ElemLit& lit) {
  switch (lit.kind) {
    case ElemLit::Kind::bottom: return "bottom";
    case ElemLit::Kind::integer: return to_string(lit.values.at(0));
    case ElemLit::Kind::tuple: {
      std::string s = "(";
      for (std::size_t i = 0; i < lit.values.size(); ++i) s += (i ? "," : "") + to_string(lit.values[i]);
      return s + ")";
    }
  }
  return "";
}

std::string print_at(const Expr& e, int min_prec) {
  const int p = precedence(e.op);
  std::string s;
  switch (e.op) {
    case Expr::Op::ideal:
      s = "<";
      for (std::size_t i = 0; i < e.gens.size(); ++i) s += (i ? "," : "") + print_lit(e.gens[i]);
      return s + ">";
    case Expr::Op::var: return e.name;
    default: break;
  }
  const char* sym = "";
  switch (e.op) {
    case Expr::Op::equals: sym = " == "; break;
    case Expr::Op::subset: sym = " <= "; break;
    case Expr::Op::sum: sym = " + "; break;
    case Expr::Op::product: sym = " * "; break;
    case Expr::Op::intersect: sym = " ^ "; break;
    case Expr::Op::colon: sym = " : "; break;
    default: break;
  }
  // Comparisons do not chain, so both sides sit one level up.
  s = print_at(*e.lhs, p == 0 ? 1 : p) + sym + print_at(*e.rhs, p + 1);
  return p < min_prec ? "(" + s + ")" : s;
}

void collect_vars(const Expr& e, std::vector<std::string>& out) {
  if (e.op == Expr::Op::var) {
    if (std::find(out.begin(), out.end(), e.name) == out.end()) out.push_back(e.name);
    return;
  }
  if (e.lhs) collect_vars(*e.lhs, out);
  if (e.rhs) collect_vars(*e.rhs, out);
}

std::int64_t small(const Int& v, const char* what) { return checked_int64(v, what); }

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  if (a.op != b.op || a.gens != b.gens || a.name != b.name) return false;
  auto same = [](const ExprPtr& x, const ExprPtr& y) { return (!x && !y) || (x && y && *x == *y); };
  return same(a.lhs, b.lhs) && same(a.rhs, b.rhs);
}

ExprPtr parse_expr(const std::string& input) { return Parser(lex(input)).parse(); }

std::string print_expr(const Expr& e) { return print_at(e, 0); }

std::vector<std::string> expr_variables(const Expr& e) {
  std::vector<std::string> out;
  collect_vars(e, out);
  return out;
}

Element literal_element(const SemiringPtr& S, const ElemLit& lit) {
  auto mismatch = [&] { return CarrierMismatch("literal " + print_lit(lit) + " is not an element of " + S->id()); };
  Element e;
  switch (S->carrier()) {
    case Carrier::min_plus:
      if (lit.kind == ElemLit::Kind::bottom) {
        e = Element::bottom();
      } else if (lit.kind == ElemLit::Kind::tuple || S->dimension() == 1) {
        e = Element(Coords(lit.values));
      } else {
        throw mismatch();
      }
      break;
    case Carrier::powerset_lattice:
      if (lit.kind == ElemLit::Kind::bottom) throw mismatch();
      if (lit.kind == ElemLit::Kind::tuple) {
        std::uint64_t mask = 0;
        for (const auto& v : lit.values) {
          const auto m = small(v, "powerset member");
          if (m < 1 || m > static_cast<std::int64_t>(S->dimension())) throw mismatch();
          mask |= std::uint64_t{1} << (m - 1);
        }
        e = Element(Int(mask));
      } else {
        e = Element(lit.values.at(0));
      }
      break;
    case Carrier::fid:
      throw CarrierMismatch("FId elements have no literal form; bind them to variables");
    default:
      if (lit.kind != ElemLit::Kind::integer) throw mismatch();
      e = Element(lit.values.at(0));
  }
  if (!S->belongs(e)) throw mismatch();
  return e;
}

EvalResult eval_expr(const Expr& e, const SemiringPtr& S, const Env& env) {
  switch (e.op) {
    case Expr::Op::ideal: {
      std::vector<Element> gens;
      for (const auto& lit : e.gens) gens.push_back(literal_element(S, lit));
      return {mk_ideal(S, std::move(gens)), Verification::exact()};
    }
    case Expr::Op::var: {
      auto it = env.find(e.name);
      if (it == env.end()) throw Error("unbound variable " + e.name);
      if (!same_semiring(*it->second.semiring(), *S))
        throw CarrierMismatch("variable " + e.name + " is bound to an ideal of " + it->second.semiring()->id() +
                              ", not " + S->id());
      return {it->second, Verification::exact()};
    }
    default: break;
  }
  const auto l = eval_expr(*e.lhs, S, env), r = eval_expr(*e.rhs, S, env);
  if (l.is_bool() || r.is_bool()) throw Error("a comparison cannot be an operand of " + print_expr(e));
  const Ideal &I = l.ideal(), &J = r.ideal();
  const Verification v = l.verification.combine(r.verification);
  switch (e.op) {
    case Expr::Op::sum: return {add_ideals(I, J), v};
    case Expr::Op::product: return {mul_ideals(I, J), v};
    case Expr::Op::intersect: return {intersect(I, J), v};
    case Expr::Op::colon: {
      auto c = colon(I, J);
      return {c.ideal, v.combine(c.verification)};
    }
    case Expr::Op::equals: return {equals(I, J), v};
    case Expr::Op::subset: return {is_subset(I, J), v};
    default: throw InternalError("unhandled expression node");
  }
}

}  // namespace srlab
