#include "srlab/integer.hpp"

#include <cctype>
#include <limits>

#include "srlab/error.hpp"

namespace srlab {

Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return (a / gcd(a, b)) * b;
}

std::optional<std::int64_t> to_int64(const Int& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    return std::nullopt;
  return v.convert_to<std::int64_t>();
}

std::int64_t checked_int64(const Int& v, std::string_view what) {
  auto r = to_int64(v);
  if (!r) throw ResourceLimit(std::string(what) + " exceeds 64-bit range");
  return *r;
}

Int parse_int(std::string_view text) {
  if (text.empty()) throw Error("empty integer literal");
  std::size_t i = (text[0] == '-') ? 1 : 0;
  if (i == text.size()) throw Error("malformed integer literal '" + std::string(text) + "'");
  for (std::size_t k = i; k < text.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw Error("malformed integer literal '" + std::string(text) + "'");
  return Int(std::string(text));
}

std::string to_string(const Int& v) { return v.str(); }

bool is_prime(const Int& p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (Int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

unsigned valuation(const Int& n, const Int& p) {
  if (n <= 0 || p < 2) throw PreconditionError("valuation needs n > 0 and p >= 2");
  unsigned v = 0;
  Int m = n;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

std::vector<Int> prime_factors(Int n) {
  std::vector<Int> out;
  if (n < 2) return out;
  for (Int d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<Int> divisors(const Int& n) {
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace srlab
