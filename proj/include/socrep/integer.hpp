#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace socrep {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Parses a non-negative or negative decimal integer; throws InvalidInput on junk.
Integer parse_integer(std::string_view text);

/// Parses "a/b" or "a" into a reduced rational; no decimal points accepted.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Smallest l with 2^l >= x. Requires x >= 1.
int ceil_log2(const Integer& x);

Integer pow2(int exponent);

bool is_power_of_two(const Integer& x);

Integer gcd(const Integer& a, const Integer& b);

/// Index of the lowest set bit; nullopt for zero.
std::optional<int> lowest_bit(const Integer& x);

/// Number of set bits of a non-negative integer.
int popcount(const Integer& x);

/// Value as int64 when it fits.
std::optional<std::int64_t> to_int64(const Integer& x);

}  // namespace socrep
