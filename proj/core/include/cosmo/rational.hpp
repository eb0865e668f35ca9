#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cosmo {

// Arbitrary precision integers and normalized rationals (denominator > 0).
using Integer = mpz_class;
using Rational = mpq_class;

struct RationalInterval {
  Rational lower;
  Rational upper;

  bool contains(const Rational& x) const { return lower <= x && x <= upper; }
};

Integer binomial(const Integer& n, unsigned long k);
Integer binomial(std::uint64_t n, unsigned long k);

// Exact power with non-negative exponent; pow(x, 0) == 1 even for x == 0.
Rational power(const Rational& base, std::uint64_t exponent);

// Rational bounds on sqrt(x) for x >= 0, with lower <= sqrt(x) <= upper and
// upper - lower <= 2^-precision_bits * max(1, sqrt(x)).
RationalInterval sqrt_bounds(const Rational& x, unsigned precision_bits = 64);

// Parses "3/10", "-7", "0.05", "1e-3" into an exact rational. Decimal input is
// interpreted in base ten, so "0.05" is exactly 1/20.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& x);
double to_double(const Rational& x);

}  // namespace cosmo
