#pragma once

#include <concepts>
#include <string>

#include "qeuler/cyclo.hpp"
#include "qeuler/cyclo_padic.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/padic.hpp"
#include "qeuler/rational.hpp"

namespace qeuler {

// Per-ring constants and predicates. Constants are built "like" an existing
// element so that rings carrying context (prime, precision, level) produce
// compatible values.
template <class T>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static constexpr const char* kName = "exact";
  static Rational from_rational(const Rational&, const Rational& r) { return r; }
  static bool is_zero(const Rational& x) { return x == 0; }
};

template <>
struct RingTraits<CycloExact> {
  static constexpr const char* kName = "cyclotomic";
  static CycloExact from_rational(const CycloExact&, const Rational& r) { return CycloExact(r); }
  static bool is_zero(const CycloExact& x) { return x.is_zero(); }
};

template <>
struct RingTraits<ComplexF> {
  static constexpr const char* kName = "complex";
  static ComplexF from_rational(const ComplexF&, const Rational& r) { return ComplexF(r.get_d(), 0.0); }
  static bool is_zero(const ComplexF& x) { return x == ComplexF(0.0, 0.0); }
};

template <>
struct RingTraits<PAdic> {
  static constexpr const char* kName = "padic";
  static PAdic from_rational(const PAdic& like, const Rational& r) {
    return PAdic(like.prime(), r, constant_precision(like));
  }
  static bool is_zero(const PAdic& x) { return x.is_zero(); }
  static long constant_precision(const PAdic& like) {
    if (like.prime() == 0) throw InvalidArgument("p-adic constant requested without a prime");
    return like.precision() == PAdic::kInfinity ? 64 : like.precision();
  }
};

template <>
struct RingTraits<CycloPAdic> {
  static constexpr const char* kName = "padic-cyclotomic";
  static CycloPAdic from_rational(const CycloPAdic& like, const Rational& r) {
    const long prec = like.precision() == PAdic::kInfinity ? 64 : like.precision();
    return CycloPAdic::constant(PAdic(like.prime(), r, prec), like.level());
  }
  static bool is_zero(const CycloPAdic& x) { return x.is_zero(); }
};

// The contract every Euler/L evaluator is generic over.
template <class T>
concept CoefficientRing = std::copyable<T> && requires(const T& a, const T& b, const Rational& r) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { RingTraits<T>::from_rational(a, r) } -> std::convertible_to<T>;
  { RingTraits<T>::is_zero(a) } -> std::convertible_to<bool>;
};

template <CoefficientRing T>
T ring_from_int(const T& like, long k) {
  return RingTraits<T>::from_rational(like, Rational(k));
}

template <CoefficientRing T>
T ring_one(const T& like) {
  return ring_from_int(like, 1);
}

template <CoefficientRing T>
bool ring_is_zero(const T& x) {
  return RingTraits<T>::is_zero(x);
}

template <CoefficientRing T>
T ring_inverse(const T& x) {
  if (ring_is_zero(x)) throw DivisionByZero(std::string("inverse of zero in the ") + RingTraits<T>::kName + " ring");
  return ring_one(x) / x;
}

// x^e by repeated squaring; negative e inverts first.
template <CoefficientRing T>
T ring_pow(const T& x, long e) {
  if constexpr (std::same_as<T, Rational>) {
    return rational_pow(x, e);
  } else if constexpr (requires { { x.pow(e) } -> std::same_as<T>; }) {
    return x.pow(e);
  } else {
    if (e < 0) return ring_pow(ring_inverse(x), -e);
    T result = ring_one(x);
    T base = x;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }
}

enum class LimitRule { kReject, kAllow };

// [x]_q = (1 - q^x) / (1 - q). With LimitRule::kAllow, q = 1 yields x.
template <CoefficientRing T>
T q_bracket(long x, const T& q, LimitRule rule = LimitRule::kReject) {
  const T one = ring_one(q);
  const T denom = one - q;
  if (ring_is_zero(denom)) {
    if (rule == LimitRule::kAllow) return ring_from_int(q, x);
    throw DivisionByZero("q-bracket with q = 1");
  }
  return (one - ring_pow(q, x)) / denom;
}

// (1 - qx) / (1 - q) for a caller-supplied power qx = q^x.
template <CoefficientRing T>
T q_bracket_from_power(const T& qx, const T& q) {
  const T one = ring_one(q);
  const T denom = one - q;
  if (ring_is_zero(denom)) throw DivisionByZero("q-bracket with q = 1");
  return (one - qx) / denom;
}

// s (s-1) ... (s-l+1) / l!
template <CoefficientRing T>
T gen_binomial(const T& s, long l) {
  if (l < 0) throw InvalidArgument("gen_binomial requires l >= 0");
  T num = ring_one(s);
  for (long j = 0; j < l; ++j) num = num * (s - ring_from_int(s, j));
  return num / RingTraits<T>::from_rational(s, Rational(factorial(l)));
}

}  // namespace qeuler
