#include "qeuler/padicl.hpp"

#include <algorithm>

namespace qeuler {

namespace {

long v_of(long n, long p) { return valuation_of(Integer(n), p); }

// Ring-specific construction of scalars, twists and character tables.
template <class T>
struct RingOps;

template <>
struct RingOps<PAdic> {
  static PAdic scalar(const PAdic& x, const PlParams&) { return x; }
  static PAdic twist(const PlParams& params, long prec) {
    if (params.w_level != 0) throw InvalidArgument("a nontrivial twist needs the cyclotomic p-adic ring");
    return PAdic(params.p, 1L, prec);
  }
  static CharTable<PAdic> table(const DirichletCharacter& chi, const PlParams& params, long prec) {
    return embed_padic(chi, params.p, prec);
  }
  static long precision(const PAdic& x) { return x.precision(); }
};

template <>
struct RingOps<CycloPAdic> {
  static CycloPAdic scalar(const PAdic& x, const PlParams& params) {
    return CycloPAdic::constant(x, params.ring_level());
  }
  static CycloPAdic twist(const PlParams& params, long prec) {
    if (params.w_level == 0) return CycloPAdic::constant(PAdic(params.p, 1L, prec), 1);
    return CycloPAdic::root_of_unity(params.w_exponent, params.p, params.w_level, prec);
  }
  static CharTable<CycloPAdic> table(const DirichletCharacter& chi, const PlParams& params, long prec) {
    return embed_padic_cyclotomic(chi, params.p, params.ring_level(), prec);
  }
  static long precision(const CycloPAdic& x) { return x.precision(); }
};

template <class T>
struct Context {
  long prec;
  T one;
  EulerParams<T> base;   // (alpha, q, w)
  EulerParams<T> level;  // (alpha, q^F, w^F)
};

template <class T>
Context<T> make_context(const PlParams& params, long prec) {
  const T q = RingOps<T>::scalar(PAdic(params.p, params.q, prec), params);
  const T w = RingOps<T>::twist(params, prec);
  EulerParams<T> base(params.alpha, q, w);
  EulerParams<T> level = base.scaled(params.F);
  return Context<T>{prec, ring_one(q), std::move(base), std::move(level)};
}

// Working precision for index n: every closed-form value divides by
// (1 - q^{alpha F})^n.
long working_precision(const PlParams& params, long n) {
  const long vq = valuation_of(Integer(params.q.get_num() - params.q.get_den()), params.p);
  const long loss = vq + v_of(params.alpha, params.p) + v_of(params.F, params.p);
  return params.precision + (n + 1) * loss + 10;
}

// Evaluates at increasing working precision until the result carries at
// least the requested precision.
template <class T, class Fn>
T at_precision(const PlParams& params, long n, Fn&& fn) {
  long prec = working_precision(params, n);
  for (int attempt = 0; attempt < 4; ++attempt) {
    T value = fn(prec);
    if (RingOps<T>::precision(value) >= params.precision) return value.with_precision(params.precision);
    prec *= 2;
  }
  throw PrecisionExhausted("could not reach p^" + std::to_string(params.precision) + " precision");
}

// [count]_{q^a}^n sum_{eta<count} (-1)^eta w^{step eta} chi(eta) E_{n,Q}^{(alpha,W)}(eta/count)
// with Q = q^F, W = w^F and step = F/count, using Q^{alpha eta/count} = q^{alpha step eta}.
template <class T>
T level_sum(long n, const CharTable<T>& chi, const Context<T>& ctx, long count, long step, bool twist_weight,
            const std::optional<EulerParams<T>>& literal = std::nullopt) {
  const CharTable<T> unit = unit_table(ctx.one);
  const T& qa = ctx.base.q_alpha();
  const T w_step = ring_pow(ctx.base.w(), step);
  T sum = ctx.one - ctx.one;
  T weight = ctx.one;
  for (long eta = 0; eta < count; ++eta) {
    if (chi.is_nonzero(eta)) {
      T value = literal ? twisted_gen_euler_poly(n, Rational(Rational(eta) / count), unit, *literal)
                        : twisted_gen_euler_at_power(n, ring_pow(qa, step * eta), unit, ctx.level);
      T term = chi(eta) * value;
      if (twist_weight) term = weight * term;
      sum = (eta & 1) ? sum - term : sum + term;
    }
    weight = weight * w_step;
  }
  return ring_pow(q_bracket(count, qa), n) * sum;
}

template <class T>
T complement_sum_at(long n, const CharTable<T>& chi, const Context<T>& ctx, const PlParams& params) {
  const CharTable<T> unit = unit_table(ctx.one);
  const T& qa = ctx.base.q_alpha();
  T sum = ctx.one - ctx.one;
  for (long a = 0; a < params.F; ++a) {
    if (a % params.p == 0 || !chi.is_nonzero(a)) continue;
    const T value = twisted_gen_euler_at_power(n, ring_pow(qa, a), unit, ctx.level);
    T term = ring_pow(ctx.base.w(), a) * chi(a) * value;
    sum = (a & 1) ? sum - term : sum + term;
  }
  return ring_pow(q_bracket(params.F, qa), n) * sum;
}

// [p]_{q^{alpha F/p}}^n.
template <class T>
T interpolation_prefactor(long n, const Context<T>& ctx, const PlParams& params) {
  return ring_pow(q_bracket(params.p, ring_pow(ctx.base.q_alpha(), params.F / params.p)), n);
}

}  // namespace

void PlParams::validate() const {
  if (!is_odd_prime(p)) throw InvalidArgument("p must be an odd prime");
  if (alpha < 1) throw InvalidArgument("weight alpha must be a positive integer");
  if (precision < 1) throw InvalidArgument("precision must be positive");
  if (F < 1 || F % 2 == 0 || F % p != 0) throw InvalidArgument("F must be an odd multiple of p");
  if (F % chi.conductor() != 0) throw InvalidArgument("F must be a multiple of the conductor of chi");
  if ((p - 1) % chi.order() != 0) {
    throw UnsupportedEmbedding("character order " + std::to_string(chi.order()) + " does not divide p - 1");
  }
  if (q == 1) throw InvalidArgument("q = 1 is excluded");
  if (valuation_of(q.get_den(), p) != 0) throw InvalidArgument("q must be a p-adic integer");
  const Rational diff = q - 1;
  if (valuation_of(Integer(diff.get_num()), p) < 1) throw InvalidArgument("q must satisfy q = 1 (mod p)");
  if (w_level < 0) throw InvalidArgument("twist level must be non-negative");
  if (w_level > 0 && w_exponent % p == 0) throw InvalidArgument("twist exponent must be prime to p");
}

RegionTPoint RegionTPoint::padic(const PAdic& s) {
  // |s|_p < p^((p-2)/(p-1)) with integral valuations means v(s) >= 0.
  if (!s.is_exact_zero() && !s.is_zero() && s.valuation() < 0) {
    throw RegionViolation("s has valuation " + std::to_string(s.valuation()) + ", outside the region T");
  }
  return RegionTPoint(s);
}

PAdic RegionTPoint::as_padic(long p, long prec) const {
  if (padic_) return *padic_;
  return PAdic(p, integer_, prec);
}

std::string RegionTPoint::to_string() const {
  if (padic_) return padic_->to_digits();
  return std::to_string(integer_);
}

PAdic angle_bracket(long a, const PlParams& params, long prec) {
  if (a % params.p == 0) throw InvalidArgument("<a> needs a prime to p");
  const PAdic qa = PAdic(params.p, params.q, prec).pow(params.alpha);
  long r = a % params.p;
  if (r < 0) r += params.p;
  return q_bracket(a, qa) / teichmuller(r, params.p, prec);
}

PAdic angle_power(long a, const RegionTPoint& s, const PlParams& params) {
  const long prec = params.precision + 10;
  const PAdic angle = angle_bracket(a, params, prec);
  if (s.is_integer()) return angle.pow(-s.integer_value()).with_precision(params.precision);
  return one_unit_power(angle, -s.as_padic(params.p, prec)).with_precision(params.precision);
}

template <class T>
T gen_euler_number(long n, const DirichletCharacter& chi, const PlParams& params) {
  params.validate();
  return at_precision<T>(params, n, [&](long prec) {
    const Context<T> ctx = make_context<T>(params, prec);
    return level_sum(n, RingOps<T>::table(chi, params, prec), ctx, params.F, 1, true);
  });
}

template <class T>
T second_gen_euler_number(long n, const DirichletCharacter& chi, const PlParams& params) {
  params.validate();
  return at_precision<T>(params, n, [&](long prec) {
    const Context<T> ctx = make_context<T>(params, prec);
    return level_sum(n, RingOps<T>::table(chi, params, prec), ctx, params.F / params.p, params.p, true);
  });
}

template <class T>
T rescaled_gen_euler_number(long n, const DirichletCharacter& chi, const PlParams& params) {
  params.validate();
  return at_precision<T>(params, n, [&](long prec) {
    const Context<T> ctx = make_context<T>(params, prec);
    // (q^p, w^p, F/p): level F/p of the rescaled family is again (q^F, w^F).
    const EulerParams<T> rescaled(params.alpha, ring_pow(ctx.base.q(), params.p), ring_pow(ctx.base.w(), params.p));
    const Context<T> alt{prec, ctx.one, rescaled, rescaled.scaled(params.F / params.p)};
    return level_sum(n, RingOps<T>::table(chi, params, prec), alt, params.F / params.p, 1, true);
  });
}

template <class T>
T p_l_function(const RegionTPoint& s, const PlParams& params) {
  params.validate();
  const long vF = v_of(params.F, params.p);
  // v(C(-s,l) q^{alpha a l} ([F]/[a])^l E_l) >= l v([F]) = l v(F).
  long l_max = (params.precision + vF - 1) / vF;
  // At s = -n the binomial coefficients vanish beyond l = n.
  if (s.is_integer() && s.integer_value() <= 0) l_max = -s.integer_value();
  const long n_loss = s.is_integer() && s.integer_value() <= 0 ? -s.integer_value() : l_max;
  const DirichletCharacter chi = params.chi.primitive();
  return at_precision<T>(params, n_loss, [&](long prec) {
    const Context<T> ctx = make_context<T>(params, prec);
    const CharTable<T> table = RingOps<T>::table(chi, params, prec);
    const TwistedEulerFamily<T> level(ctx.level, unit_table(ctx.one));
    const PAdic qa = PAdic(params.p, params.q, prec).pow(params.alpha);
    const PAdic bracket_F = q_bracket(params.F, qa);
    const PAdic minus_s = -s.as_padic(params.p, prec);
    std::vector<PAdic> binom;  // C(-s, l)
    for (long l = 0; l <= l_max; ++l) binom.push_back(gen_binomial(minus_s, l));
    std::vector<T> numbers;
    for (long l = 0; l <= l_max; ++l) numbers.push_back(level.number(l));

    T total = ctx.one - ctx.one;
    for (long a = 1; a <= params.F; ++a) {
      if (a % params.p == 0 || !table.is_nonzero(a)) continue;
      const PAdic bracket_a = q_bracket(a, qa);
      const PAdic ratio = qa.pow(a) * bracket_F / bracket_a;
      T inner = ctx.one - ctx.one;
      PAdic ratio_l(params.p, 1L, prec);
      for (long l = 0; l <= l_max; ++l) {
        inner = inner + numbers[static_cast<std::size_t>(l)] * RingOps<T>::scalar(binom[static_cast<std::size_t>(l)] * ratio_l, params);
        ratio_l *= ratio;
      }
      const PAdic angle = bracket_a / teichmuller(a % params.p, params.p, prec);
      const PAdic angle_pow = s.is_integer() ? angle.pow(-s.integer_value()) : one_unit_power(angle, minus_s);
      T term = table(a) * ring_pow(ctx.base.w(), a) * RingOps<T>::scalar(angle_pow, params) * inner;
      total = (a & 1) ? total - term : total + term;
    }
    return total;
  });
}

DirichletCharacter primitive_chi_n(const DirichletCharacter& chi, long n, long p) {
  return chi_n(chi.primitive(), n, p).primitive();
}

template <class T>
T complement_sum(long n, const PlParams& params) {
  params.validate();
  const DirichletCharacter chin = primitive_chi_n(params.chi, n, params.p);
  return at_precision<T>(params, n, [&](long prec) {
    const Context<T> ctx = make_context<T>(params, prec);
    return complement_sum_at(n, RingOps<T>::table(chin, params, prec), ctx, params);
  });
}

namespace {

template <class T>
InterpolationReport<T> finish_report(long n, const PlParams& params, T lhs, T gen, T second, T prefactor,
                                     T chi_p, T complement) {
  const long M = params.precision;
  T rhs = (gen - prefactor * chi_p * second).with_precision(M);
  const long diff = std::min(padic_valuation(T(lhs - rhs)), M);
  const long comp = std::min(padic_valuation(T(lhs - complement)), M);
  const bool pass = diff >= M - 2 && comp >= M - 2;
  return InterpolationReport<T>{n,      std::move(lhs),       std::move(rhs),
                                std::move(complement),        std::move(gen),
                                std::move(second),            std::move(prefactor),
                                std::move(chi_p),             diff,
                                comp,   M,                    pass};
}

}  // namespace

template <class T>
InterpolationReport<T> interpolation_check(long n, const PlParams& params) {
  if (n < 0) throw InvalidArgument("interpolation index must be non-negative");
  params.validate();
  const DirichletCharacter chin = primitive_chi_n(params.chi, n, params.p);
  T lhs = p_l_function<T>(RegionTPoint::integer(-n), params);
  const long prec = working_precision(params, n) * 2;
  const Context<T> ctx = make_context<T>(params, prec);
  const CharTable<T> table = RingOps<T>::table(chin, params, prec);
  T gen = level_sum(n, table, ctx, params.F, 1, true);
  T second = level_sum(n, table, ctx, params.F / params.p, params.p, true);
  T prefactor = interpolation_prefactor(n, ctx, params);
  T chi_p = table.is_nonzero(params.p) ? table(params.p) : ctx.one - ctx.one;
  T complement = complement_sum_at(n, table, ctx, params);
  return finish_report(n, params, std::move(lhs), std::move(gen), std::move(second), std::move(prefactor),
                       std::move(chi_p), std::move(complement));
}

template <class T>
InterpolationReport<T> interpolation_check_printed(long n, const PlParams& params) {
  if (n < 0) throw InvalidArgument("interpolation index must be non-negative");
  params.validate();
  const DirichletCharacter chin = primitive_chi_n(params.chi, n, params.p);
  T lhs = p_l_function<T>(RegionTPoint::integer(-n), params);
  const long prec = working_precision(params, n) * 2;
  const Context<T> ctx = make_context<T>(params, prec);
  const CharTable<T> table = RingOps<T>::table(chin, params, prec);
  const std::optional<EulerParams<T>> literal(ctx.base);
  T gen = level_sum(n, table, ctx, params.F, 1, false, literal);
  T second = level_sum(n, table, ctx, params.F / params.p, params.p, false, literal);
  T prefactor = interpolation_prefactor(n, ctx, params);
  T chi_p = table.is_nonzero(params.p) ? table(params.p) : ctx.one - ctx.one;
  T complement = complement_sum_at(n, table, ctx, params);
  return finish_report(n, params, std::move(lhs), std::move(gen), std::move(second), std::move(prefactor),
                       std::move(chi_p), std::move(complement));
}

template <class T>
long kummer_valuation(long n, long m, const PlParams& params) {
  const T a = p_l_function<T>(RegionTPoint::integer(-n), params);
  const T b = p_l_function<T>(RegionTPoint::integer(-m), params);
  return std::min(padic_valuation(T(a - b)), params.precision);
}

#define QEULER_INSTANTIATE(T)                                                                       \
  template T gen_euler_number<T>(long, const DirichletCharacter&, const PlParams&);                 \
  template T second_gen_euler_number<T>(long, const DirichletCharacter&, const PlParams&);          \
  template T rescaled_gen_euler_number<T>(long, const DirichletCharacter&, const PlParams&);        \
  template T p_l_function<T>(const RegionTPoint&, const PlParams&);                                 \
  template T complement_sum<T>(long, const PlParams&);                                              \
  template InterpolationReport<T> interpolation_check<T>(long, const PlParams&);                    \
  template InterpolationReport<T> interpolation_check_printed<T>(long, const PlParams&);      \
  template long kummer_valuation<T>(long, long, const PlParams&);

QEULER_INSTANTIATE(PAdic)
QEULER_INSTANTIATE(CycloPAdic)

#undef QEULER_INSTANTIATE

}  // namespace qeuler
