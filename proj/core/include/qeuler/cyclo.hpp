#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qeuler/rational.hpp"

namespace qeuler {

using ComplexF = std::complex<double>;

long euler_phi(long n);

// Coefficients (constant term first) of the n-th cyclotomic polynomial.
// Cached; safe to call concurrently.
const std::vector<Integer>& cyclotomic_polynomial(long n);

// Element of Q(zeta_n), stored as a polynomial in zeta_n of degree < phi(n)
// reduced modulo the n-th cyclotomic polynomial. Elements of different
// orders are promoted to the lcm of the orders before combining, so every
// binary operation is defined for any pair of elements.
class CycloExact {
 public:
  CycloExact() : CycloExact(Rational(0)) {}
  CycloExact(const Rational& c);  // NOLINT(google-explicit-constructor)
  CycloExact(long c) : CycloExact(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  CycloExact(long order, std::vector<Rational> coeffs);

  // zeta_n^k for any integer k.
  static CycloExact root_of_unity(long k, long n);

  long order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // The same element viewed in Q(zeta_m); requires order() | m.
  CycloExact promoted(long m) const;

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  CycloExact inverse() const;  // throws DivisionByZero on zero
  CycloExact pow(long e) const;

  // zeta_n -> exp(2 pi i / n).
  ComplexF embed_complex() const;

  std::string to_string() const;

  CycloExact operator-() const;
  CycloExact& operator+=(const CycloExact& rhs);
  CycloExact& operator-=(const CycloExact& rhs);
  CycloExact& operator*=(const CycloExact& rhs);
  CycloExact& operator/=(const CycloExact& rhs);

  friend CycloExact operator+(CycloExact a, const CycloExact& b) { return a += b; }
  friend CycloExact operator-(CycloExact a, const CycloExact& b) { return a -= b; }
  friend CycloExact operator*(CycloExact a, const CycloExact& b) { return a *= b; }
  friend CycloExact operator/(CycloExact a, const CycloExact& b) { return a /= b; }
  friend bool operator==(const CycloExact& a, const CycloExact& b);

 private:
  long order_;
  std::vector<Rational> coeffs_;
};

}  // namespace qeuler
