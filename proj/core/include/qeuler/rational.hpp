#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace qeuler {

using Integer = mpz_class;
// Always canonical (lowest terms, positive denominator); backed by GMP.
using Rational = mpq_class;

// Parses "n", "-n" or "n/d". Throws InvalidArgument on malformed input or a
// zero denominator.
Rational parse_rational(std::string_view text);

// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

Rational rational_pow(const Rational& base, long exponent);

// Exact k-th root when one exists in Q (k >= 1).
std::optional<Rational> rational_root(const Rational& r, unsigned long k);

// base^(num/den) when exactly representable in Q.
std::optional<Rational> rational_power(const Rational& base, const Rational& exponent);

Integer binomial(long n, long k);
Integer factorial(long n);

}  // namespace qeuler
