#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace srlab {

// Arbitrary precision integer used for every integer-valued carrier.
// Expression templates off: results convert implicitly like plain integers.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// Narrowing that never wraps silently.
std::optional<std::int64_t> to_int64(const Int& v);
std::int64_t checked_int64(const Int& v, std::string_view what);

Int parse_int(std::string_view text);
std::string to_string(const Int& v);

bool is_prime(const Int& p);
// Exponent of the prime p in n (n > 0).
unsigned valuation(const Int& n, const Int& p);
// Distinct prime factors in ascending order, by trial division.
std::vector<Int> prime_factors(Int n);
std::vector<Int> divisors(const Int& n);

}  // namespace srlab
