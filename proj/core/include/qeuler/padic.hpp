#pragma once

#include <limits>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qeuler/rational.hpp"

namespace qeuler {

// Capped-precision element of Q_p for an odd prime p.
//
// A nonzero element is p^v * u with u a unit known modulo p^(N - v), where N
// is the absolute precision. Two kinds of zero exist: the exact zero
// (valuation and precision both infinite) and O(p^N), an element only known
// to be divisible by p^N (unit 0, valuation reported as N).
//
// Precision propagation:
//   add/sub  absolute precision = min of the operands
//   mul      relative precision = min of the operands, valuations add
//   inv      valuation negated, relative precision kept
class PAdic {
 public:
  static constexpr long kInfinity = std::numeric_limits<long>::max();

  PAdic() = default;  // exact zero, prime unset
  PAdic(long p, const Integer& value, long prec);
  PAdic(long p, const Rational& value, long prec);
  PAdic(long p, long value, long prec) : PAdic(p, Integer(value), prec) {}

  static PAdic exact_zero(long p);
  static PAdic zero(long p, long prec);  // O(p^prec)

  long prime() const { return p_; }
  // kInfinity for the exact zero; prec for O(p^prec).
  long valuation() const { return val_; }
  const Integer& unit() const { return unit_; }
  long precision() const { return prec_; }
  long relative_precision() const;

  bool is_exact_zero() const { return prec_ == kInfinity; }
  // True when the element is indistinguishable from zero at its precision.
  bool is_zero() const { return unit_ == 0; }
  bool is_unit() const { return !is_zero() && val_ == 0; }

  // Same element with absolute precision lowered to min(prec, current).
  PAdic with_precision(long prec) const;

  PAdic inverse() const;
  PAdic pow(long e) const;

  // Rational representative unit * p^v.
  Rational lift() const;
  // Representative of the element modulo p^n in [0, p^n); requires v >= 0
  // and n <= precision().
  Integer residue(long n) const;

  // "d0 + d1*p + d2*p^2 + ... (mod p^N)".
  std::string to_digits() const;

  PAdic operator-() const;
  PAdic& operator+=(const PAdic& rhs);
  PAdic& operator-=(const PAdic& rhs);
  PAdic& operator*=(const PAdic& rhs);
  PAdic& operator/=(const PAdic& rhs);

  friend PAdic operator+(PAdic a, const PAdic& b) { return a += b; }
  friend PAdic operator-(PAdic a, const PAdic& b) { return a -= b; }
  friend PAdic operator*(PAdic a, const PAdic& b) { return a *= b; }
  friend PAdic operator/(PAdic a, const PAdic& b) { return a /= b; }
  // Equality at the common precision.
  friend bool operator==(const PAdic& a, const PAdic& b);

 private:
  static PAdic from_scaled(long p, Integer x, long shift, long prec);
  void check_same_prime(const PAdic& rhs) const;

  long p_ = 0;
  long val_ = kInfinity;
  Integer unit_ = 0;
  long prec_ = kInfinity;
};

Integer prime_power(long p, long k);

// v_p of a nonzero integer.
long valuation_of(const Integer& n, long p);

bool is_odd_prime(long p);

// Smallest primitive root modulo p^e (p odd prime).
long smallest_primitive_root(long p, long e = 1);

// The (p-1)-st root of unity congruent to a mod p, by Newton iteration on
// x^(p-1) - 1, to absolute precision m.
PAdic teichmuller(long a, long p, long m);

// q^(-x) for a unit q.
PAdic qpow_neg(const PAdic& q, long x);

// base^exponent for a 1-unit base via the binomial series
// sum_k C(exponent, k) (base - 1)^k. The exponent may have negative
// valuation as long as the series converges; InexactPower otherwise.
PAdic one_unit_power(const PAdic& base, const PAdic& exponent);
PAdic one_unit_power(const PAdic& base, const Rational& exponent);

// min(valuation of a - b, common precision).
long valuation_of_difference(const PAdic& a, const PAdic& b);

void to_json(nlohmann::json& j, const PAdic& x);
void from_json(const nlohmann::json& j, PAdic& x);

}  // namespace qeuler
