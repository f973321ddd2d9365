#include "qeuler/lfun.hpp"

#include <cmath>

namespace qeuler {

namespace {

struct Continuation {
  ComplexF s;
  double q = 0.5;         // q of the [2]_q prefactor
  double qa = 0.5;        // base of the brackets (q^alpha, or q^{alpha F})
  ComplexF w{1.0, 0.0};
  std::vector<ComplexF> psi;  // psi[j] = chi(offset + j), j < period
  long offset = 0;
  double x = 0.0;  // brackets are [m + x]
  long max_terms = 2000;
  double eps = 1e-12;
};

bool nonpositive_integer(ComplexF s, long& n) {
  if (s.imag() != 0.0 || s.real() > 0.0) return false;
  const double r = std::round(s.real());
  if (r != s.real()) return false;
  n = static_cast<long>(-r);
  return true;
}

// [2]_q (1-qa)^s sum_k C(-s,k) (-1)^k qa^{xk}
//   sum_j (-1)^l psi_j w^l qa^{lk} / (1 + w^d qa^{dk}),  l = offset + j.
SeriesValue continue_series(const Continuation& c) {
  const long d = static_cast<long>(c.psi.size());
  long first = -1;
  for (long j = 0; j < d; ++j) {
    if (c.psi[static_cast<std::size_t>(j)] != ComplexF(0.0, 0.0)) {
      first = c.offset + j;
      break;
    }
  }
  const ComplexF prefactor = (1.0 + c.q) * std::exp(c.s * std::log(1.0 - c.qa));
  if (first < 0) return SeriesValue{ComplexF(0.0, 0.0), 1, 0.0};
  if (c.x + static_cast<double>(first) <= 0.0) {
    throw InvalidArgument("series has a [0]^(-s) term; need x > 0 or chi(0) = 0");
  }
  const ComplexF wd = std::pow(c.w, static_cast<int>(d));
  const double rho = std::pow(c.qa, c.x + static_cast<double>(first));
  const double abs_s = std::abs(c.s);
  const double scale = std::abs(prefactor) * static_cast<double>(d) / (1.0 - std::pow(c.qa, static_cast<double>(d)));

  long finite_n = -1;
  const bool finite = nonpositive_integer(c.s, finite_n);

  ComplexF sum(0.0, 0.0);
  ComplexF binom(1.0, 0.0);  // C(-s, k)
  double binom_bound = 1.0;  // prod_{i<k} (|s|+i) / k!
  for (long k = 0; k < c.max_terms; ++k) {
    const double qak = std::pow(c.qa, static_cast<double>(k));
    const ComplexF denom = 1.0 + wd * std::pow(qak, static_cast<double>(d));
    if (std::abs(denom) < 1e-14) {
      throw PoleError(static_cast<int>(k), "pole: 1 + w^d q^(alpha d k) = 0 at k = " + std::to_string(k));
    }
    ComplexF inner(0.0, 0.0);
    for (long j = 0; j < d; ++j) {
      const ComplexF v = c.psi[static_cast<std::size_t>(j)];
      if (v == ComplexF(0.0, 0.0)) continue;
      const long l = c.offset + j;
      const ComplexF t = v * std::pow(c.w, static_cast<int>(l)) * std::pow(qak, static_cast<double>(l));
      inner += (l & 1) ? -t : t;
    }
    ComplexF term = binom * std::pow(c.qa, c.x * static_cast<double>(k)) * inner / denom;
    sum += (k & 1) ? -term : term;

    if (finite && k >= finite_n) return SeriesValue{prefactor * sum, k + 1, 0.0};
    // Bound on sum_{j>k} |term_j|, ratios bounded by rho (|s|+j)/(j+1).
    const double next_bound = binom_bound * (abs_s + static_cast<double>(k)) / static_cast<double>(k + 1);
    const double r = rho * std::max(1.0, (abs_s + static_cast<double>(k + 1)) / static_cast<double>(k + 2));
    if (r < 1.0) {
      const double tail = scale * next_bound * std::pow(rho, static_cast<double>(k + 1)) / (1.0 - r);
      if (tail < c.eps) return SeriesValue{prefactor * sum, k + 1, tail};
    }
    binom *= (-c.s - static_cast<double>(k)) / static_cast<double>(k + 1);
    binom_bound = next_bound;
  }
  throw TruncationFailure("continuation did not reach tolerance " + std::to_string(c.eps) + " within " +
                          std::to_string(c.max_terms) + " terms");
}

double as_double(const Rational& r) { return r.get_d(); }

double bracket(double qa, double x) { return (1.0 - std::pow(qa, x)) / (1.0 - qa); }

Continuation base(ComplexF s, const LfunParams& params) {
  params.validate();
  Continuation c;
  c.s = s;
  c.q = as_double(params.q);
  c.qa = std::pow(c.q, static_cast<double>(params.alpha));
  c.w = params.w.embed_complex();
  c.max_terms = params.max_terms;
  c.eps = params.eps;
  return c;
}

std::vector<ComplexF> character_values(const DirichletCharacter& chi, long offset) {
  const CharTable<ComplexF> t = complex_table(chi);
  std::vector<ComplexF> out;
  for (long j = 0; j < chi.modulus(); ++j) {
    out.push_back(t.is_nonzero(offset + j) ? t(offset + j) : ComplexF(0.0, 0.0));
  }
  return out;
}

// zeta_{Q}^{(alpha, W)}(s, x) with Q = q^F, W = w^F.
SeriesValue level_hurwitz(ComplexF s, double x, long F, const LfunParams& params) {
  Continuation c = base(s, params);
  c.q = std::pow(c.q, static_cast<double>(F));
  c.qa = std::pow(c.qa, static_cast<double>(F));
  c.w = std::pow(c.w, static_cast<int>(F));
  c.psi = {ComplexF(1.0, 0.0)};
  c.x = x;
  return continue_series(c);
}

void check_odd(long F, const char* what) {
  if (F < 1 || F % 2 == 0) throw InvalidArgument(std::string(what) + " must be odd and positive");
}

}  // namespace

void LfunParams::validate() const {
  if (alpha < 1) throw InvalidArgument("weight alpha must be a positive integer");
  if (q <= 0 || q >= 1) throw InvalidArgument("complex-side q must lie in (0, 1)");
  if (max_terms < 1) throw InvalidArgument("max_terms must be positive");
  if (!(eps > 0.0)) throw InvalidArgument("eps must be positive");
  const ComplexF wc = w.embed_complex();
  if (std::abs(std::abs(wc) - 1.0) > 1e-12) throw InvalidArgument("twist must be a root of unity");
}

SeriesValue hurwitz_zeta(ComplexF s, const Rational& x, const LfunParams& params) {
  if (x <= 0) throw InvalidArgument("Hurwitz zeta needs x > 0");
  Continuation c = base(s, params);
  c.psi = {ComplexF(1.0, 0.0)};
  c.x = as_double(x);
  return continue_series(c);
}

SeriesValue dirichlet_l(const Rational& x, ComplexF s, const LfunParams& params) {
  if (x < 0) throw InvalidArgument("Dirichlet L-series needs x >= 0");
  Continuation c = base(s, params);
  c.psi = character_values(params.chi, 0);
  c.x = as_double(x);
  return continue_series(c);
}

SeriesValue l_function(ComplexF s, const LfunParams& params) {
  Continuation c = base(s, params);
  c.psi = character_values(params.chi, 1);
  c.offset = 1;
  return continue_series(c);
}

SeriesValue l_function_decomposed(ComplexF s, const LfunParams& params) {
  params.validate();
  const long d = params.chi.modulus();
  const double q = as_double(params.q);
  const double qa = std::pow(q, static_cast<double>(params.alpha));
  const ComplexF w = params.w.embed_complex();
  const CharTable<ComplexF> chi = complex_table(params.chi);
  const ComplexF factor = (1.0 + q) / (1.0 + std::pow(q, static_cast<double>(d))) *
                          std::exp(-s * std::log(bracket(qa, static_cast<double>(d))));
  SeriesValue out{ComplexF(0.0, 0.0), 0, 0.0};
  for (long a = 1; a <= d; ++a) {
    if (!chi.is_nonzero(a)) continue;
    const SeriesValue z = level_hurwitz(s, static_cast<double>(a) / static_cast<double>(d), d, params);
    ComplexF term = chi(a) * std::pow(w, static_cast<int>(a)) * z.value;
    out.value += (a & 1) ? -term : term;
    out.terms_used = std::max(out.terms_used, z.terms_used);
    out.tail_bound += z.tail_bound;
  }
  out.value *= factor;
  out.tail_bound *= std::abs(factor);
  return out;
}

SeriesValue partial_zeta(ComplexF s, long a, long F, const LfunParams& params) {
  check_odd(F, "F");
  if (a < 0 || a >= F) throw InvalidArgument("partial zeta residue must satisfy 0 <= a < F");
  params.validate();
  const double q = as_double(params.q);
  const double qa = std::pow(q, static_cast<double>(params.alpha));
  const ComplexF w = params.w.embed_complex();
  const ComplexF common = (1.0 + q) / (1.0 + std::pow(q, static_cast<double>(F))) *
                          std::exp(-s * std::log(bracket(qa, static_cast<double>(F))));
  ComplexF factor;
  SeriesValue z;
  if (a == 0) {
    z = level_hurwitz(s, 1.0, F, params);
    factor = -std::pow(w, static_cast<int>(F)) * common;
  } else {
    z = level_hurwitz(s, static_cast<double>(a) / static_cast<double>(F), F, params);
    factor = std::pow(w, static_cast<int>(a)) * common;
    if (a & 1) factor = -factor;
  }
  return SeriesValue{factor * z.value, z.terms_used, std::abs(factor) * z.tail_bound};
}

SeriesValue partial_zeta_sum(ComplexF s, long F, const LfunParams& params) {
  check_odd(F, "F");
  if (F % params.chi.modulus() != 0) throw InvalidArgument("F must be a multiple of the character modulus");
  const CharTable<ComplexF> chi = complex_table(params.chi);
  SeriesValue out{ComplexF(0.0, 0.0), 0, 0.0};
  for (long a = 0; a < F; ++a) {
    if (!chi.is_nonzero(a)) continue;
    const SeriesValue h = partial_zeta(s, a, F, params);
    out.value += chi(a) * h.value;
    out.terms_used = std::max(out.terms_used, h.terms_used);
    out.tail_bound += h.tail_bound;
  }
  return out;
}

SeriesValue partial_zeta_series(ComplexF s, long a, long F, const LfunParams& params) {
  check_odd(F, "F");
  if (a < 1 || a >= F) throw InvalidArgument("the partial zeta series needs 1 <= a < F");
  params.validate();
  const double q = as_double(params.q);
  const double qa = std::pow(q, static_cast<double>(params.alpha));
  const double qaa = std::pow(qa, static_cast<double>(a));
  const double ratio = qaa * bracket(qa, static_cast<double>(F)) / bracket(qa, static_cast<double>(a));
  if (!(ratio < 1.0)) {
    throw DivergentParameters("q^(alpha a)[F]/[a] = " + std::to_string(ratio) + " >= 1");
  }
  // sup_m q^{aa}[F][m]_{q^{aF}}/[a] = q^{aa}/(1 - q^{aa}).
  const double sup = qaa / (1.0 - qaa);
  if (!(sup < 1.0)) {
    throw DivergentParameters("q^(alpha a) = " + std::to_string(qaa) + " >= 1/2; the binomial expansion diverges");
  }
  const ComplexF w = params.w.embed_complex();
  ComplexF factor = (1.0 + q) / (1.0 + std::pow(q, static_cast<double>(F))) * std::pow(w, static_cast<int>(a)) *
                    std::exp(-s * std::log(bracket(qa, static_cast<double>(a))));
  if (a & 1) factor = -factor;

  const TwistedEulerFamily<CycloExact> level(params.exact_params().scaled(F), unit_table(CycloExact(1)));
  long finite_n = -1;
  const bool finite = nonpositive_integer(s, finite_n);
  const double abs_s = std::abs(s);
  ComplexF sum(0.0, 0.0);
  ComplexF binom(1.0, 0.0);
  for (long l = 0; l < params.max_terms; ++l) {
    const ComplexF e = level.number(l).embed_complex();
    const ComplexF term = binom * std::pow(ratio, static_cast<double>(l)) * e;
    sum += term;
    if (finite && l >= finite_n) return SeriesValue{factor * sum, l + 1, 0.0};
    const double r = sup * std::max(1.0, (abs_s + static_cast<double>(l)) / static_cast<double>(l + 1));
    if (l > abs_s && r < 1.0) {
      const double tail = std::abs(factor) * std::abs(term) * r / (1.0 - r);
      if (tail < params.eps) return SeriesValue{factor * sum, l + 1, tail};
    }
    binom *= (-s - static_cast<double>(l)) / static_cast<double>(l + 1);
  }
  throw TruncationFailure("partial zeta series did not reach tolerance within " +
                          std::to_string(params.max_terms) + " terms");
}

ComplexF abel_diagnostic(double r, long n, const Rational& x, const LfunParams& params, long terms) {
  if (!(r > 0.0 && r < 1.0)) throw InvalidArgument("Abel parameter must lie in (0, 1)");
  params.validate();
  const double q = as_double(params.q);
  const double qa = std::pow(q, static_cast<double>(params.alpha));
  const double xd = as_double(x);
  const ComplexF w = params.w.embed_complex();
  const CharTable<ComplexF> chi = complex_table(params.chi);
  ComplexF sum(0.0, 0.0);
  ComplexF wm(1.0, 0.0);
  double rm = 1.0;
  for (long m = 0; m <= terms; ++m) {
    if (chi.is_nonzero(m)) {
      const ComplexF t = rm * chi(m) * wm * std::pow(bracket(qa, xd + static_cast<double>(m)), static_cast<double>(n));
      sum += (m & 1) ? -t : t;
    }
    wm *= w;
    rm *= r;
  }
  return (1.0 + q) * sum;
}

}  // namespace qeuler
