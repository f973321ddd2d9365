#pragma once

#include <string>
#include <vector>

#include "qeuler/padic.hpp"

namespace qeuler {

// Element of Q_p(zeta) (zeta a primitive p^r-th root of unity), stored in the
// power basis 1, zeta, ..., zeta^(phi(p^r)-1) and reduced modulo the p^r-th
// cyclotomic polynomial.
class CycloPAdic {
 public:
  CycloPAdic(long p, long level, std::vector<PAdic> coeffs);

  static CycloPAdic constant(const PAdic& c, long level);
  // zeta^k at absolute precision prec.
  static CycloPAdic root_of_unity(long k, long p, long level, long prec);

  long prime() const { return p_; }
  long level() const { return level_; }
  long order() const;  // p^level
  const std::vector<PAdic>& coeffs() const { return coeffs_; }

  // Minimum absolute precision over the coefficients.
  long precision() const;
  // Minimum coefficient valuation (kInfinity when every coefficient is exact zero).
  long valuation() const;

  // Substitutes zeta -> 1 in the reduced representative. Modulo p this is
  // the residue map of the totally ramified extension, so an element is a
  // unit exactly when its augmentation is a p-adic unit.
  PAdic augment() const;

  bool is_zero() const;
  bool is_unit() const { return augment().is_unit(); }

  CycloPAdic with_precision(long prec) const;

  // Inverse in Q_p(zeta). Units go through Newton iteration
  // y <- y (2 - x y) seeded with the augmentation inverse; other elements
  // through the norm to Q_p.
  CycloPAdic inverse() const;
  // zeta -> zeta^k (k prime to p).
  CycloPAdic conjugate(long k) const;
  CycloPAdic pow(long e) const;

  std::string to_string() const;

  CycloPAdic operator-() const;
  CycloPAdic& operator+=(const CycloPAdic& rhs);
  CycloPAdic& operator-=(const CycloPAdic& rhs);
  CycloPAdic& operator*=(const CycloPAdic& rhs);
  CycloPAdic& operator*=(const PAdic& rhs);
  CycloPAdic& operator/=(const CycloPAdic& rhs);

  friend CycloPAdic operator+(CycloPAdic a, const CycloPAdic& b) { return a += b; }
  friend CycloPAdic operator-(CycloPAdic a, const CycloPAdic& b) { return a -= b; }
  friend CycloPAdic operator*(CycloPAdic a, const CycloPAdic& b) { return a *= b; }
  friend CycloPAdic operator*(CycloPAdic a, const PAdic& b) { return a *= b; }
  friend CycloPAdic operator/(CycloPAdic a, const CycloPAdic& b) { return a /= b; }
  friend bool operator==(const CycloPAdic& a, const CycloPAdic& b);

 private:
  CycloPAdic unit_inverse() const;
  void check_compatible(const CycloPAdic& rhs) const;

  long p_;
  long level_;
  std::vector<PAdic> coeffs_;
};

}  // namespace qeuler
