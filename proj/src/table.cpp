#include "srlab/table.hpp"

#include <fstream>
#include <sstream>

#include "srlab/error.hpp"

namespace srlab {

FiniteTable::FiniteTable(std::size_t order, std::size_t zero, std::size_t one)
    : order_(order), zero_(zero), one_(one), add_(order * order, zero), mul_(order * order, zero) {
  if (order < 1 || order > kMaxOrder) throw Error("table order must be in [1, 64]");
  if (zero >= order || one >= order) throw Error("zero/one index out of range");
}

FiniteTable::FiniteTable(std::size_t zero, std::size_t one,
                         const std::vector<std::vector<std::size_t>>& add,
                         const std::vector<std::vector<std::size_t>>& mul)
    : FiniteTable(add.size(), zero, one) {
  if (mul.size() != order_) throw Error("addition and multiplication tables differ in order");
  for (std::size_t i = 0; i < order_; ++i) {
    if (add[i].size() != order_ || mul[i].size() != order_)
      throw Error("table row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < order_; ++j) {
      if (add[i][j] >= order_ || mul[i][j] >= order_)
        throw Error("table entry out of range at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      set_add(i, j, add[i][j]);
      set_mul(i, j, mul[i][j]);
    }
  }
}

std::uint64_t ideal_closure(const FiniteTable& t, std::uint64_t mask) {
  const std::size_t n = t.order();
  mask |= std::uint64_t{1} << t.zero();
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t a = 0; a < n; ++a) {
      if (!(mask >> a & 1)) continue;
      std::uint64_t extra = 0;
      for (std::size_t b = 0; b < n; ++b) {
        if (mask >> b & 1) extra |= std::uint64_t{1} << t.add(a, b);
        extra |= std::uint64_t{1} << t.mul(a, b);
      }
      if ((mask | extra) != mask) {
        mask |= extra;
        grew = true;
      }
    }
  }
  return mask;
}

std::vector<Violation> verify_axioms(const FiniteTable& t) {
  const std::size_t n = t.order();
  std::vector<Violation> out;
  auto report = [&](const char* axiom, std::vector<std::size_t> w) {
    for (const auto& v : out)
      if (v.axiom == axiom) return;
    out.push_back({axiom, std::move(w)});
  };

  if (t.zero() == t.one()) report("zero-ne-one", {t.zero()});
  for (std::size_t a = 0; a < n; ++a) {
    if (t.add(a, t.zero()) != a || t.add(t.zero(), a) != a) report("add-identity", {a});
    if (t.mul(a, t.one()) != a || t.mul(t.one(), a) != a) report("mul-identity", {a});
    if (t.mul(a, t.zero()) != t.zero() || t.mul(t.zero(), a) != t.zero()) report("absorbing", {a});
    for (std::size_t b = 0; b < n; ++b) {
      if (t.add(a, b) != t.add(b, a)) report("add-commutative", {a, b});
      if (t.mul(a, b) != t.mul(b, a)) report("mul-commutative", {a, b});
      for (std::size_t c = 0; c < n; ++c) {
        if (t.add(t.add(a, b), c) != t.add(a, t.add(b, c))) report("add-associative", {a, b, c});
        if (t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c))) report("mul-associative", {a, b, c});
        if (t.mul(a, t.add(b, c)) != t.add(t.mul(a, b), t.mul(a, c))) report("distributive", {a, b, c});
      }
    }
  }
  return out;
}

nlohmann::ordered_json to_json(const Violation& v) {
  nlohmann::ordered_json j;
  j["axiom"] = v.axiom;
  j["witness"] = v.witness;
  return j;
}

nlohmann::ordered_json to_json(const std::vector<Violation>& vs) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : vs) arr.push_back(to_json(v));
  return arr;
}

namespace {

std::vector<std::string> significant_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

std::size_t keyword_value(const std::string& line, const char* keyword, std::size_t lineno) {
  std::istringstream in(line);
  std::string key;
  long long value = -1;
  if (!(in >> key >> value) || key != keyword || value < 0)
    throw ParseError(std::string("expected '") + keyword + " <index>'", lineno, 1);
  return static_cast<std::size_t>(value);
}

std::vector<std::size_t> parse_row(const std::string& line, std::size_t lineno) {
  std::istringstream in(line);
  std::vector<std::size_t> row;
  long long v;
  while (in >> v) {
    if (v < 0) throw ParseError("negative table entry", lineno, 1);
    row.push_back(static_cast<std::size_t>(v));
  }
  if (!in.eof()) throw ParseError("non-numeric table entry", lineno, 1);
  return row;
}

}  // namespace

FiniteTable parse_table(std::string_view text) {
  auto lines = significant_lines(text);
  if (lines.size() < 3) throw ParseError("table header incomplete", lines.size() + 1, 1);
  const std::size_t n = keyword_value(lines[0], "order", 1);
  const std::size_t zero = keyword_value(lines[1], "zero", 2);
  const std::size_t one = keyword_value(lines[2], "one", 3);
  if (n < 1 || n > FiniteTable::kMaxOrder) throw ParseError("order must be in [1, 64]", 1, 1);
  if (lines.size() != 3 + 2 * n)
    throw ParseError("expected " + std::to_string(2 * n) + " table rows, found " +
                         std::to_string(lines.size() - 3),
                     lines.size(), 1);
  std::vector<std::vector<std::size_t>> add, mul;
  for (std::size_t i = 0; i < n; ++i) add.push_back(parse_row(lines[3 + i], 4 + i));
  for (std::size_t i = 0; i < n; ++i) mul.push_back(parse_row(lines[3 + n + i], 4 + n + i));
  return FiniteTable(zero, one, add, mul);
}

FiniteTable read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open table file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str());
}

std::string format_table(const FiniteTable& t) {
  std::ostringstream out;
  out << "order " << t.order() << "\nzero " << t.zero() << "\none " << t.one() << "\n";
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < t.order(); ++i) {
      for (std::size_t j = 0; j < t.order(); ++j) {
        if (j) out << ' ';
        out << (pass == 0 ? t.add(i, j) : t.mul(i, j));
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace srlab
