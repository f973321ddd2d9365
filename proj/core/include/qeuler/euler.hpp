#pragma once

#include <mutex>
#include <optional>
#include <vector>

#include "qeuler/characters.hpp"
#include "qeuler/integral.hpp"
#include "qeuler/ring.hpp"

namespace qeuler {

// q^e for a rational exponent, when the ring can represent it exactly
// (InexactPower otherwise). Integer exponents always work.
Rational q_power(const Rational& q, const Rational& e);
CycloExact q_power(const CycloExact& q, const Rational& e);
ComplexF q_power(const ComplexF& q, const Rational& e);
PAdic q_power(const PAdic& q, const Rational& e);
CycloPAdic q_power(const CycloPAdic& q, const Rational& e);

// Ring-specific admissibility of q and w (no-ops on exact and complex rings;
// on p-adic rings q = 1 mod p and w a p-power root of unity).
void validate_euler_q(const Rational&);
void validate_euler_q(const CycloExact&);
void validate_euler_q(const ComplexF&);
void validate_euler_q(const PAdic& q);
void validate_euler_q(const CycloPAdic& q);
void validate_twist(const Rational&);
void validate_twist(const CycloExact&);
void validate_twist(const ComplexF&);
void validate_twist(const PAdic& w);
void validate_twist(const CycloPAdic& w);

// The tuple (alpha, q, w) parameterizing every family.
template <CoefficientRing T>
class EulerParams {
 public:
  EulerParams(long alpha, T q, T w)
      : alpha_(checked_alpha(alpha)), q_(std::move(q)), w_(std::move(w)), q_alpha_(ring_pow(q_, alpha_)) {
    validate_euler_q(q_);
    validate_twist(w_);
    const T one = ring_one(q_);
    if (ring_is_zero(T(one - q_))) throw InvalidArgument("q = 1 is excluded");
    if (ring_is_zero(T(one - q_alpha_))) throw InvalidArgument("q^alpha = 1 is excluded");
  }

  long alpha() const { return alpha_; }
  const T& q() const { return q_; }
  const T& w() const { return w_; }
  const T& q_alpha() const { return q_alpha_; }

  // (alpha, q^d, w^d): the parameters of the level-d family.
  EulerParams scaled(long d) const { return EulerParams(alpha_, ring_pow(q_, d), ring_pow(w_, d)); }

 private:
  static long checked_alpha(long alpha) {
    if (alpha < 1) throw InvalidArgument("weight alpha must be a positive integer");
    return alpha;
  }

  long alpha_;
  T q_;
  T w_;
  T q_alpha_;
};

// The character mod 1 carried into T (value 1 at every integer).
template <CoefficientRing T>
CharTable<T> unit_table(const T& like) {
  return CharTable<T>{1, {ring_one(like)}, {true}};
}

namespace detail {

template <CoefficientRing T>
T signed_term(const T& x, long sign_exp) {
  return (sign_exp & 1) ? -x : x;
}

}  // namespace detail

// Terms (indexed by k) of the closed form of the Dirichlet-twisted family
// with q^{alpha x} supplied:
//   [2]_q (1-q^a)^-n C(n,k) (-1)^k (q^{ax})^k
//     sum_{l<d} (-1)^l w^l chi(l) q^{akl} / (q^{akd} w^d + 1)
// PoleError(k) when a denominator vanishes.
template <CoefficientRing T>
std::vector<T> twisted_gen_euler_terms(long n, const T& q_alpha_x, const CharTable<T>& chi,
                                       const EulerParams<T>& params) {
  if (n < 0) throw InvalidArgument("Euler index must be non-negative");
  const T& qa = params.q_alpha();
  const T one = ring_one(qa);
  const long d = chi.modulus;
  const T wd = ring_pow(params.w(), d);
  const T qad = ring_pow(qa, d);
  const T prefactor = (one + params.q()) / ring_pow(T(one - qa), n);

  std::vector<T> terms;
  T qadk = one;  // q^{a k d}
  T qaxk = one;  // (q^{ax})^k
  T qak = one;   // q^{a k}
  for (long k = 0; k <= n; ++k) {
    const T denom = qadk * wd + one;
    if (ring_is_zero(denom)) {
      throw PoleError(static_cast<int>(k), "pole: q^(alpha*k*d) w^d + 1 = 0 at k = " + std::to_string(k));
    }
    T inner = one - one;
    T wl = one;
    T qakl = one;
    for (long l = 0; l < d; ++l) {
      if (chi.is_nonzero(l)) inner = inner + detail::signed_term(T(wl * chi(l) * qakl), l);
      wl = wl * params.w();
      qakl = qakl * qak;
    }
    const T binom = RingTraits<T>::from_rational(qa, Rational(binomial(n, k)));
    terms.push_back(detail::signed_term(T(prefactor * binom * qaxk * inner / denom), k));
    qadk = qadk * qad;
    qaxk = qaxk * q_alpha_x;
    qak = qak * qa;
  }
  return terms;
}

template <CoefficientRing T>
T twisted_gen_euler_at_power(long n, const T& q_alpha_x, const CharTable<T>& chi, const EulerParams<T>& params) {
  const std::vector<T> terms = twisted_gen_euler_terms(n, q_alpha_x, chi, params);
  T total = terms.front();
  for (std::size_t k = 1; k < terms.size(); ++k) total = total + terms[k];
  return total;
}

template <CoefficientRing T>
T euler_number(long n, const EulerParams<T>& params) {
  return twisted_gen_euler_at_power(n, ring_one(params.q()), unit_table(params.q()), params);
}

template <CoefficientRing T>
T euler_polynomial(long n, const Rational& x, const EulerParams<T>& params) {
  return twisted_gen_euler_at_power(n, q_power(params.q(), Rational(x * params.alpha())), unit_table(params.q()),
                                    params);
}

template <CoefficientRing T>
T twisted_gen_euler_poly(long n, const Rational& x, const CharTable<T>& chi, const EulerParams<T>& params) {
  return twisted_gen_euler_at_power(n, q_power(params.q(), Rational(x * params.alpha())), chi, params);
}

// The family for fixed (params, chi) with memoized numbers E~_l(chi).
// Cache reads and writes are guarded; concurrent fills compute the same
// values, so whichever lands first is kept.
template <CoefficientRing T>
class TwistedEulerFamily {
 public:
  TwistedEulerFamily(EulerParams<T> params, CharTable<T> chi) : params_(std::move(params)), chi_(std::move(chi)) {}

  const EulerParams<T>& params() const { return params_; }
  const CharTable<T>& chi() const { return chi_; }

  T number(long l) const {
    {
      std::lock_guard lock(mutex_);
      if (l < static_cast<long>(numbers_.size()) && numbers_[static_cast<std::size_t>(l)]) {
        return *numbers_[static_cast<std::size_t>(l)];
      }
    }
    T value = twisted_gen_euler_at_power(l, ring_one(params_.q()), chi_, params_);
    std::lock_guard lock(mutex_);
    if (l >= static_cast<long>(numbers_.size())) numbers_.resize(static_cast<std::size_t>(l) + 1);
    if (!numbers_[static_cast<std::size_t>(l)]) numbers_[static_cast<std::size_t>(l)] = value;
    return *numbers_[static_cast<std::size_t>(l)];
  }

  T polynomial(long n, const Rational& x) const { return twisted_gen_euler_poly(n, x, chi_, params_); }

  // sum_l C(n,l) q^{a x l} E~_l(chi) [x]_{q^a}^{n-l}
  T addition_formula(long n, const Rational& x) const {
    const T qax = q_power(params_.q(), Rational(x * params_.alpha()));
    const T bracket = q_bracket_from_power(qax, params_.q_alpha());
    const T one = ring_one(params_.q());
    T sum = one - one;
    for (long l = 0; l <= n; ++l) {
      const T binom = RingTraits<T>::from_rational(one, Rational(binomial(n, l)));
      sum = sum + binom * ring_pow(qax, l) * number(l) * ring_pow(bracket, n - l);
    }
    return sum;
  }

  // The same expansion with the summation index reversed:
  // sum_k C(n,k) q^{a(n-k)x} E~_{n-k}(chi) [x]^k.
  T addition_formula_reversed(long n, const Rational& x) const {
    const T qax = q_power(params_.q(), Rational(x * params_.alpha()));
    const T bracket = q_bracket_from_power(qax, params_.q_alpha());
    const T one = ring_one(params_.q());
    T sum = one - one;
    for (long k = 0; k <= n; ++k) {
      const T binom = RingTraits<T>::from_rational(one, Rational(binomial(n, k)));
      sum = sum + binom * ring_pow(qax, n - k) * number(n - k) * ring_pow(bracket, k);
    }
    return sum;
  }

 private:
  EulerParams<T> params_;
  CharTable<T> chi_;
  mutable std::mutex mutex_;
  mutable std::vector<std::optional<T>> numbers_;
};

template <CoefficientRing T>
T addition_formula(long n, const Rational& x, const CharTable<T>& chi, const EulerParams<T>& params) {
  return TwistedEulerFamily<T>(params, chi).addition_formula(n, x);
}

// chi(. + n) as a table of the same modulus; the closed form only needs a
// d-periodic table, not a character.
template <class T>
CharTable<T> shifted_table(const CharTable<T>& chi, long n) {
  CharTable<T> out = chi;
  for (long l = 0; l < chi.modulus; ++l) {
    out.values[static_cast<std::size_t>(l)] = chi(l + n);
    out.nonzero[static_cast<std::size_t>(l)] = chi.is_nonzero(l + n);
  }
  return out;
}

enum class RecurrenceForm {
  kAsStated,        // E~_m(n|chi) with chi itself; exact only when chi(x+n) = chi(x)
  kShiftedCharacter // E~_m(n|chi(.+n)), exact for every n
};

// w^n E~_m(n|chi) + (-1)^(n-1) E~_m(chi) - [2]_q sum_{l<n} (-1)^(n-1-l) chi(l) w^l [l]_{q^a}^m
template <CoefficientRing T>
T recurrence_residual(long m, long n, const CharTable<T>& chi, const EulerParams<T>& params,
                      RecurrenceForm form = RecurrenceForm::kAsStated) {
  if (n < 1) throw InvalidArgument("recurrence shift must be >= 1");
  const T one = ring_one(params.q());
  const T shifted = form == RecurrenceForm::kAsStated
                        ? twisted_gen_euler_poly(m, Rational(n), chi, params)
                        : twisted_gen_euler_poly(m, Rational(n), shifted_table(chi, n), params);
  const T base = twisted_gen_euler_at_power(m, one, chi, params);
  T boundary = one - one;
  for (long l = 0; l < n; ++l) {
    if (!chi.is_nonzero(l)) continue;
    // [0]^0 = 1.
    const T bracket_pow =
        (l == 0) ? (m == 0 ? one : one - one) : ring_pow(q_bracket(l, params.q_alpha()), m);
    boundary = boundary + detail::signed_term(T(chi(l) * ring_pow(params.w(), l) * bracket_pow), n - 1 - l);
  }
  T lhs = ring_pow(params.w(), n) * shifted + detail::signed_term(base, n - 1);
  return lhs - (one + params.q()) * boundary;
}

// ([d]_{q^a}^n / [d]_{-q}) sum_{a<d} (-1)^a w^a chi(a) E_{n,q^d}^{(alpha,w^d)}((x+a)/d)
// for d an odd multiple of the character modulus. The level-d polynomial is
// evaluated through (q^d)^{alpha (x+a)/d} = q^{alpha x} q^{alpha a}, so only
// q^{alpha x} needs to exist in the ring.
template <CoefficientRing T>
T distribution_formula(long n, const Rational& x, const CharTable<T>& chi, const EulerParams<T>& params, long d) {
  if (d < 1 || d % 2 == 0 || d % chi.modulus != 0) {
    throw InvalidArgument("distribution level must be an odd multiple of the character modulus");
  }
  const T one = ring_one(params.q());
  const EulerParams<T> level = params.scaled(d);
  const CharTable<T> unit = unit_table(params.q());
  const T qax = q_power(params.q(), Rational(x * params.alpha()));
  T sum = one - one;
  T wa = one;
  T qaa = one;
  for (long a = 0; a < d; ++a) {
    if (chi.is_nonzero(a)) {
      const T value = twisted_gen_euler_at_power(n, T(qax * qaa), unit, level);
      sum = sum + detail::signed_term(T(wa * chi(a) * value), a);
    }
    wa = wa * params.w();
    qaa = qaa * params.q_alpha();
  }
  // [d]_{-q} = (1 + q^d) / (1 + q) for odd d.
  const T minus_q_bracket = (one + ring_pow(params.q(), d)) / (one + params.q());
  return ring_pow(q_bracket(d, params.q_alpha()), n) / minus_q_bracket * sum;
}

template <class T>
struct WittReport {
  T closed_form;
  T integral;
  long level = 0;
  long period = 1;
  long diff_valuation = 0;
};

// Scalar q of a p-adic parameter set.
inline const PAdic& padic_scalar(const PAdic& x) { return x; }
PAdic padic_scalar(const CycloPAdic& x);

// Compares the closed form with the fermionic Riemann sum of
// q^{-xi} chi(xi) w^xi [x+xi]_{q^a}^n at level N, summing over
// Z/(d p^N) with d the character modulus.
template <class T>
WittReport<T> witt_verify(long n, long x, const CharTable<T>& chi, const EulerParams<T>& params, long level,
                          unsigned chunks = 1) {
  const PAdic q = padic_scalar(params.q());
  const T one = ring_one(params.q());
  // Period of w (w is a p-power root of unity on the p-adic side).
  std::vector<T> w_powers{one};
  for (long t = 1;; ++t) {
    T next = w_powers.back() * params.w();
    if (next == one) break;
    if (t > 100000) throw InvalidArgument("twist is not a root of unity of manageable order");
    w_powers.push_back(std::move(next));
  }
  const PAdic qa = padic_scalar(params.q_alpha());
  const PAdic bracket_scale = (PAdic(q.prime(), 1L, q.precision()) - qa).inverse();
  const PAdic pone(q.prime(), 1L, q.precision());
  // q^{-xi} and q^{a(x+xi)} tabulated over one period of the sum.
  const long count = chi.modulus * prime_power(q.prime(), level).get_si();
  std::vector<PAdic> q_inv_pow{pone};
  std::vector<PAdic> qa_pow{qa.pow(x)};
  q_inv_pow.reserve(static_cast<std::size_t>(count));
  qa_pow.reserve(static_cast<std::size_t>(count));
  const PAdic q_inv = q.inverse();
  for (long k = 1; k < count; ++k) {
    q_inv_pow.push_back(q_inv_pow.back() * q_inv);
    qa_pow.push_back(qa_pow.back() * qa);
  }
  const auto integrand = [&](long xi) -> T {
    if (!chi.is_nonzero(xi)) return one - one;
    const auto i = static_cast<std::size_t>(xi);
    const PAdic bracket = (pone - qa_pow[i]) * bracket_scale;
    const PAdic scalar = q_inv_pow[i] * bracket.pow(n);
    return chi(xi) * w_powers[static_cast<std::size_t>(xi % static_cast<long>(w_powers.size()))] * scalar;
  };
  WittReport<T> report{twisted_gen_euler_at_power(n, ring_pow(params.q_alpha(), x), chi, params),
                       riemann_sum<T>(integrand, q, level, chi.modulus, chunks), level, chi.modulus, 0};
  report.diff_valuation = padic_valuation(T(report.closed_form - report.integral));
  return report;
}

}  // namespace qeuler
