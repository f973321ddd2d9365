#pragma once

#include <optional>
#include <string>

#include "qeuler/characters.hpp"
#include "qeuler/cyclo_padic.hpp"
#include "qeuler/euler.hpp"
#include "qeuler/padic.hpp"

namespace qeuler {

// Parameters of the p-adic l-function. The twist is w = zeta_{p^r}^k with
// r = w_level (w = 1 when w_level = 0). The sums run over 0 <= a < F with F
// an odd multiple of p and of the conductor of chi.
struct PlParams {
  long p = 3;
  long alpha = 1;
  Rational q{4};
  long w_exponent = 0;
  long w_level = 0;
  DirichletCharacter chi = trivial_character();
  long F = 3;
  long precision = 10;  // M

  void validate() const;
  // Ring level used by CycloPAdic evaluations (at least 1).
  long ring_level() const { return w_level > 0 ? w_level : 1; }
};

// A point of the region T = {s : |s|_p < p^((p-2)/(p-1))}. Inside Q_p this is
// Z_p. Either an exact integer or a p-adic number.
class RegionTPoint {
 public:
  static RegionTPoint integer(long s) { return RegionTPoint(s); }
  static RegionTPoint padic(const PAdic& s);

  bool is_integer() const { return !padic_; }
  long integer_value() const { return integer_; }
  // The point as a p-adic number (exact integers at precision prec).
  PAdic as_padic(long p, long prec) const;
  std::string to_string() const;

 private:
  explicit RegionTPoint(long s) : integer_(s) {}
  explicit RegionTPoint(PAdic s) : padic_(std::move(s)) {}

  long integer_ = 0;
  std::optional<PAdic> padic_;
};

// <a> = [a]_{q^alpha} / omega(a), a 1-unit. Requires p not dividing a.
PAdic angle_bracket(long a, const PlParams& params, long prec);

// <a>^{-s}: exact power for integer s, binomial series otherwise.
PAdic angle_power(long a, const RegionTPoint& s, const PlParams& params);

// [F]_{q^a}^n sum_{a<F} (-1)^a w^a chi(a) E_{n,q^F}^{(alpha,w^F)}(a/F).
template <class T>
T gen_euler_number(long n, const DirichletCharacter& chi, const PlParams& params);

// [F/p]_{q^a}^n sum_{eta<F/p} (-1)^eta w^{p eta} chi(eta) E_{n,q^F}^{(alpha,w^F)}(eta/(F/p)).
template <class T>
T second_gen_euler_number(long n, const DirichletCharacter& chi, const PlParams& params);

// gen_euler_number with (q, w, F) -> (q^p, w^p, F/p). Differs from
// second_gen_euler_number by the factor ([F/p]_{q^a} / [F/p]_{q^{pa}})^n.
template <class T>
T rescaled_gen_euler_number(long n, const DirichletCharacter& chi, const PlParams& params);

// sum_{a in [1,F], p !| a} chi(a) (-1)^a w^a <a>^{-s}
//   sum_l C(-s,l) q^{alpha a l} ([F]/[a])^l E_{l,q^F}^{(alpha,w^F)},
// the l-series truncated once l v([F]) reaches the target precision.
template <class T>
T p_l_function(const RegionTPoint& s, const PlParams& params);

// [F]^n sum_{a<F, p !| a} (-1)^a w^a chi_n(a) E_{n,q^F}^{(alpha,w^F)}(a/F).
template <class T>
T complement_sum(long n, const PlParams& params);

template <class T>
struct InterpolationReport {
  long n = 0;
  T lhs;         // l(-n | chi)
  T rhs;         // E_{n,chi_n} - [p]_{q^{alpha F/p}}^n chi_n(p) E*_{n,chi_n}
  T complement;  // complement_sum
  T gen;
  T second;
  T prefactor;   // [p]_{q^{alpha F/p}}^n = 1/[p^{-1}]_{q^{alpha F}}^n
  T chi_n_at_p;
  long diff_valuation = 0;
  long complement_valuation = 0;
  long precision = 0;
  bool pass = false;
};

// chi_n = chi omega^{-n} in primitive form.
DirichletCharacter primitive_chi_n(const DirichletCharacter& chi, long n, long p);

template <class T>
InterpolationReport<T> interpolation_check(long n, const PlParams& params);

// The same comparison with the generalized numbers as printed: no w^a factor
// and base q evaluated at a/F. Needs q^{alpha/F}, so v(q - 1) must exceed
// v(F) (InexactPower otherwise).
template <class T>
InterpolationReport<T> interpolation_check_printed(long n, const PlParams& params);

// v(l(-n) - l(-m)); the Kummer-type congruence predicts growth when
// n = m mod (p - 1).
template <class T>
long kummer_valuation(long n, long m, const PlParams& params);

}  // namespace qeuler
