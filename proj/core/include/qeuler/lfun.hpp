#pragma once

#include <complex>
#include <vector>

#include "qeuler/characters.hpp"
#include "qeuler/euler.hpp"

namespace qeuler {

// Complex-side parameters. q is a rational in (0, 1) so the same point can
// be evaluated in floating point and, at s = -n, exactly.
struct LfunParams {
  long alpha = 1;
  Rational q{1, 2};
  CycloExact w{1};
  DirichletCharacter chi = trivial_character();
  long max_terms = 2000;  // K
  double eps = 1e-12;

  void validate() const;
  EulerParams<CycloExact> exact_params() const { return EulerParams<CycloExact>(alpha, CycloExact(q), w); }
};

struct SeriesValue {
  ComplexF value;
  long terms_used = 0;
  double tail_bound = 0.0;
};

// [2]_q sum_m (-1)^m w^m [m+x]_{q^a}^{-s}, continued through the binomial
// expansion of (1 - q^{a(m+x)})^{-s}. Requires x > 0.
SeriesValue hurwitz_zeta(ComplexF s, const Rational& x, const LfunParams& params);

// [2]_q sum_m (-1)^m chi(m) w^m [m+x]^{-s}. Requires x > 0, or x = 0 with
// chi(0) = 0.
SeriesValue dirichlet_l(const Rational& x, ComplexF s, const LfunParams& params);

// [2]_q sum_{m>=1} (-1)^m chi(m) w^m [m]^{-s}, for every modulus including 1.
SeriesValue l_function(ComplexF s, const LfunParams& params);

// The same function through the level-d Hurwitz values:
// ([2]_q/[2]_{q^d}) [d]^{-s} sum_{a=1}^{d} (-1)^a chi(a) w^a zeta_{q^d}^{(alpha,w^d)}(s, a/d).
// The residue class 0 is represented by a = d (m = d, 2d, ...).
SeriesValue l_function_decomposed(ComplexF s, const LfunParams& params);

// H(s, a, w | F) = [2]_q sum_{m>0, m = a mod F} (-1)^m w^m [m]^{-s}, F odd, 0 <= a < F.
// For a = 0 the class starts at m = F, giving
// -w^F ([2]_q/[2]_{q^F}) [F]^{-s} zeta_{q^F}^{(alpha,w^F)}(s, 1).
SeriesValue partial_zeta(ComplexF s, long a, long F, const LfunParams& params);

// sum_{a<F} chi(a) H(s, a, w | F), F an odd multiple of the modulus.
SeriesValue partial_zeta_sum(ComplexF s, long F, const LfunParams& params);

// ([2]_q/[2]_{q^F}) (-1)^a w^a [a]^{-s} sum_l C(-s,l) (q^{aa}[F]/[a])^l E_{l,q^F}^{(alpha,w^F)}
// with 1 <= a < F. The level-F numbers are computed exactly and embedded.
// DivergentParameters unless both q^{alpha a}[F]/[a] < 1 and q^{alpha a} < 1/2.
// The reported tail bound is a geometric estimate, not a certificate.
SeriesValue partial_zeta_series(ComplexF s, long a, long F, const LfunParams& params);

// [2]_q sum_{m=0}^{terms} r^m (-1)^m chi(m) w^m [x+m]^n.
ComplexF abel_diagnostic(double r, long n, const Rational& x, const LfunParams& params, long terms);

// Exact evaluations at s = -n -------------------------------------------------

// Terms (indexed by k) of the binomial continuation at s = -n:
//   [2]_q (1-q^a)^{-n} C(-s,k) (-1)^k (q^{ax})^k
//     sum_{l=offset}^{offset+d-1} (-1)^l chi(l) w^l q^{alk} / (1 + w^d q^{adk}),
// which sums [2]_q sum_{m >= offset} (-1)^m chi(m) w^m [m+x]^{-s}.
template <CoefficientRing T>
std::vector<T> continuation_terms(long n, const T& q_alpha_x, const CharTable<T>& chi, const EulerParams<T>& params,
                                  long offset = 0) {
  const T& qa = params.q_alpha();
  const T one = ring_one(qa);
  const T s = ring_from_int(one, -n);
  const long d = chi.modulus;
  const T wd = ring_pow(params.w(), d);
  const T prefactor = (one + params.q()) * ring_pow(T(one - qa), -n);
  std::vector<T> terms;
  for (long k = 0; k <= n; ++k) {
    const T qak = ring_pow(qa, k);
    T inner = one - one;
    for (long l = offset; l < offset + d; ++l) {
      if (!chi.is_nonzero(l)) continue;
      T term = chi(l) * ring_pow(params.w(), l) * ring_pow(qak, l);
      inner = (l & 1) ? T(inner - term) : T(inner + term);
    }
    const T geometric = one + wd * ring_pow(qak, d);
    if (ring_is_zero(geometric)) throw PoleError(static_cast<int>(k), "pole in the continuation at k = " + std::to_string(k));
    T term = prefactor * gen_binomial(T(-s), k) * ring_pow(q_alpha_x, k) * inner / geometric;
    terms.push_back((k & 1) ? -term : term);
  }
  return terms;
}

template <CoefficientRing T>
T sum_terms(const std::vector<T>& terms, const T& like) {
  T total = ring_from_int(like, 0);
  for (const auto& t : terms) total = total + t;
  return total;
}

// L(-n | chi) from the m >= 1 series.
template <CoefficientRing T>
T l_function_exact(long n, const CharTable<T>& chi, const EulerParams<T>& params) {
  const T one = ring_one(params.q());
  return sum_terms(continuation_terms(n, one, chi, params, 1), one);
}

// H(-n, a, w | F) by direct geometric summation over m = a + F j:
// [2]_q (1-q^a)^{-n} sum_k C(n,k) (-1)^k sum_{m>0, m=a (F)} (-1)^m w^m q^{akm}.
template <CoefficientRing T>
T partial_zeta_exact(long n, long a, long F, const EulerParams<T>& params) {
  if (F < 1 || F % 2 == 0) throw InvalidArgument("partial zeta needs an odd F");
  if (a < 0 || a >= F) throw InvalidArgument("partial zeta residue must satisfy 0 <= a < F");
  const long first = a == 0 ? F : a;
  const T& qa = params.q_alpha();
  const T one = ring_one(qa);
  const T wF = ring_pow(params.w(), F);
  T total = one - one;
  for (long k = 0; k <= n; ++k) {
    const T qak = ring_pow(qa, k);
    const T ratio = wF * ring_pow(qak, F);  // (-1)^F w^F q^{akF} up to the sign
    T head = ring_pow(params.w(), first) * ring_pow(qak, first);
    if (first & 1) head = -head;
    T term = RingTraits<T>::from_rational(one, Rational(binomial(n, k))) * head / (one + ratio);
    total = (k & 1) ? T(total - term) : T(total + term);
  }
  return (one + params.q()) * ring_pow(T(one - qa), -n) * total;
}

// ([2]_q/[2]_{q^F}) (-1)^a w^a [F]_{q^a}^n E_{n,q^F}^{(alpha,w^F)}(a/F).
template <CoefficientRing T>
T partial_zeta_closed_form(long n, long a, long F, const EulerParams<T>& params) {
  const T one = ring_one(params.q());
  const EulerParams<T> level = params.scaled(F);
  // (q^F)^{alpha a/F} = q^{alpha a}.
  const T value = twisted_gen_euler_at_power(n, ring_pow(params.q_alpha(), a), unit_table(one), level);
  T factor = (one + params.q()) / (one + level.q()) * ring_pow(params.w(), a) *
             ring_pow(q_bracket(F, params.q_alpha()), n);
  if (a & 1) factor = -factor;
  return factor * value;
}

// (1+q)/(1+w^F) sum_{a<F} (-1)^a chi(a) w^a.
template <CoefficientRing T>
T l_value_at_zero_formula(const CharTable<T>& chi, const EulerParams<T>& params, long F) {
  const T one = ring_one(params.q());
  T sum = one - one;
  for (long a = 0; a < F; ++a) {
    if (!chi.is_nonzero(a)) continue;
    T term = chi(a) * ring_pow(params.w(), a);
    sum = (a & 1) ? T(sum - term) : T(sum + term);
  }
  return (one + params.q()) / (one + ring_pow(params.w(), F)) * sum;
}

}  // namespace qeuler
