#include "cosmo/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cosmo {

Integer binomial(const Integer& n, unsigned long k) {
  if (n < 0) {
    throw std::domain_error("binomial: negative n");
  }
  Integer result;
  if (n < k) {
    return Integer(0);
  }
  mpz_bin_ui(result.get_mpz_t(), n.get_mpz_t(), k);
  return result;
}

Integer binomial(std::uint64_t n, unsigned long k) {
  Integer big;
  mpz_import(big.get_mpz_t(), 1, -1, sizeof(n), 0, 0, &n);
  return binomial(big, k);
}

Rational power(const Rational& base, std::uint64_t exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1U) {
      result *= b;
    }
    exponent >>= 1U;
    if (exponent > 0) {
      b *= b;
    }
  }
  return result;
}

RationalInterval sqrt_bounds(const Rational& x, unsigned precision_bits) {
  if (x < 0) {
    throw std::domain_error("sqrt_bounds: negative argument");
  }
  if (x == 0) {
    return {Rational(0), Rational(0)};
  }
  // sqrt(a/b) = sqrt(a*b*S^2) / (b*S) with S = 2^precision_bits.
  Integer scale = Integer(1) << precision_bits;
  Integer radicand = x.get_num() * x.get_den() * scale * scale;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  Integer denom = x.get_den() * scale;
  Rational lower(root, denom);
  lower.canonicalize();
  RationalInterval out{lower, lower};
  if (root * root != radicand) {
    Rational upper(root + 1, denom);
    upper.canonicalize();
    out.upper = upper;
  }
  return out;
}

Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  };
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) return fail();

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Rational num = parse_rational(s.substr(0, slash));
    Rational den = parse_rational(s.substr(slash + 1));
    if (den == 0) {
      throw std::domain_error("rational with zero denominator: '" + s + "'");
    }
    return num / den;
  }

  bool negative = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') {
    negative = s[i] == '-';
    ++i;
  }
  std::string digits;
  long exponent10 = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) --exponent10;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c == 'e' || c == 'E') {
      break;
    } else {
      return fail();
    }
  }
  if (!seen_digit) return fail();
  if (i < s.size()) {
    std::string exp_text = s.substr(i + 1);
    if (exp_text.empty()) return fail();
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      return fail();
    }
    if (used != exp_text.size()) return fail();
    exponent10 += e;
  }
  Rational value{Integer(digits)};
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exponent10 < 0 ? -exponent10 : exponent10));
  if (exponent10 < 0) {
    value /= Rational(ten_pow);
  } else {
    value *= Rational(ten_pow);
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& x) { return x.get_str(); }

double to_double(const Rational& x) { return x.get_d(); }

}  // namespace cosmo
