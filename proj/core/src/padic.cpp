#include "qeuler/padic.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "qeuler/errors.hpp"

namespace qeuler {

namespace {

// Powers of the most recently used prime, per thread.
const Integer& cached_power(long p, long k) {
  thread_local long cached_p = 0;
  thread_local std::vector<Integer> powers;
  if (cached_p != p) {
    cached_p = p;
    powers.assign(1, Integer(1));
  }
  while (static_cast<long>(powers.size()) <= k) powers.push_back(powers.back() * p);
  return powers[static_cast<std::size_t>(k)];
}

long strip_p(Integer& x, long p) {
  if (x == 0) return 0;
  // mpz_remove is much faster than repeated division for large inputs.
  Integer pz(p);
  return static_cast<long>(mpz_remove(x.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t()));
}

}  // namespace

Integer prime_power(long p, long k) {
  if (k < 0) throw InvalidArgument("negative exponent in prime_power");
  if (k < 4096) return cached_power(p, k);
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  return out;
}

long valuation_of(const Integer& n, long p) {
  if (n == 0) throw InvalidArgument("valuation of zero");
  Integer x = n;
  return strip_p(x, p);
}

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

long smallest_primitive_root(long p, long e) {
  if (!is_odd_prime(p)) throw InvalidArgument("primitive roots are computed for odd primes only");
  // Prime factors of p - 1.
  std::vector<long> factors;
  long m = p - 1;
  for (long d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    factors.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) factors.push_back(m);
  const Integer pz(p);
  const Integer p2 = pz * pz;
  for (long g = 2; g < p + 0; ++g) {
    bool generator = true;
    for (long f : factors) {
      Integer r;
      mpz_powm_ui(r.get_mpz_t(), Integer(g).get_mpz_t(), static_cast<unsigned long>((p - 1) / f),
                  pz.get_mpz_t());
      if (r == 1) {
        generator = false;
        break;
      }
    }
    if (!generator) continue;
    if (e >= 2) {
      // g generates mod p^e (e >= 2) iff g^(p-1) != 1 mod p^2.
      Integer r;
      mpz_powm_ui(r.get_mpz_t(), Integer(g).get_mpz_t(), static_cast<unsigned long>(p - 1),
                  p2.get_mpz_t());
      if (r == 1) continue;
    }
    return g;
  }
  throw InvalidArgument("no primitive root found");
}

PAdic::PAdic(long p, const Integer& value, long prec) {
  if (!is_odd_prime(p)) throw InvalidArgument("p-adic prime must be an odd prime, got " + std::to_string(p));
  *this = from_scaled(p, value, 0, prec);
}

PAdic::PAdic(long p, const Rational& value, long prec) {
  if (!is_odd_prime(p)) throw InvalidArgument("p-adic prime must be an odd prime, got " + std::to_string(p));
  if (value == 0) {
    *this = zero(p, prec);
    return;
  }
  Integer num = value.get_num();
  Integer den = value.get_den();
  const long vn = strip_p(num, p);
  const long vd = strip_p(den, p);
  const long v = vn - vd;
  if (prec <= v) {
    *this = zero(p, prec);
    return;
  }
  const Integer mod = prime_power(p, prec - v);
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  Integer u = num * inv;
  mpz_mod(u.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
  p_ = p;
  val_ = v;
  unit_ = std::move(u);
  prec_ = prec;
}

PAdic PAdic::exact_zero(long p) {
  PAdic out;
  out.p_ = p;
  return out;
}

PAdic PAdic::zero(long p, long prec) {
  PAdic out;
  out.p_ = p;
  out.val_ = prec;
  out.prec_ = prec;
  return out;
}

PAdic PAdic::from_scaled(long p, Integer x, long shift, long prec) {
  if (prec <= shift || x == 0) return zero(p, prec);
  const Integer& mod = cached_power(p, prec - shift);
  mpz_mod(x.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
  if (x == 0) return zero(p, prec);
  const long k = strip_p(x, p);
  PAdic out;
  out.p_ = p;
  out.val_ = shift + k;
  out.unit_ = std::move(x);
  out.prec_ = prec;
  return out;
}

long PAdic::relative_precision() const {
  if (is_exact_zero()) return kInfinity;
  return prec_ - val_;
}

PAdic PAdic::with_precision(long prec) const {
  if (prec >= prec_) return *this;
  if (is_exact_zero()) return zero(p_, prec);
  return from_scaled(p_, unit_, val_, prec);
}

void PAdic::check_same_prime(const PAdic& rhs) const {
  if (p_ != rhs.p_ && p_ != 0 && rhs.p_ != 0) {
    throw InvalidArgument("p-adic operands over different primes");
  }
}

PAdic PAdic::operator-() const {
  if (is_zero()) return *this;
  return from_scaled(p_, -unit_, val_, prec_);
}

PAdic& PAdic::operator+=(const PAdic& rhs) {
  check_same_prime(rhs);
  if (rhs.is_exact_zero()) return *this;
  if (is_exact_zero()) return *this = rhs;
  const long m = std::min(val_, rhs.val_);
  const long prec = std::min(prec_, rhs.prec_);
  if (prec <= m) return *this = zero(p_, prec);
  Integer x = 0;
  if (unit_ != 0 && val_ < prec) x += unit_ * cached_power(p_, val_ - m);
  if (rhs.unit_ != 0 && rhs.val_ < prec) x += rhs.unit_ * cached_power(p_, rhs.val_ - m);
  return *this = from_scaled(p_, std::move(x), m, prec);
}

PAdic& PAdic::operator-=(const PAdic& rhs) { return *this += -rhs; }

PAdic& PAdic::operator*=(const PAdic& rhs) {
  check_same_prime(rhs);
  if (is_exact_zero()) return *this;
  if (rhs.is_exact_zero()) return *this = rhs;
  const long shift = val_ + rhs.val_;
  const long rel = std::min(prec_ - val_, rhs.prec_ - rhs.val_);
  return *this = from_scaled(p_, unit_ * rhs.unit_, shift, shift + rel);
}

PAdic& PAdic::operator/=(const PAdic& rhs) { return *this *= rhs.inverse(); }

PAdic PAdic::inverse() const {
  if (is_exact_zero()) throw DivisionByZero("inverse of exact p-adic zero");
  if (is_zero()) {
    throw PrecisionExhausted("inverse of an element known only modulo " + std::to_string(p_) + "^" +
                             std::to_string(prec_));
  }
  const long rel = prec_ - val_;
  Integer inv;
  mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), cached_power(p_, rel).get_mpz_t());
  return from_scaled(p_, std::move(inv), -val_, -val_ + rel);
}

PAdic PAdic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) {
    // x^0 = 1 exactly; report it at the operand's precision so it combines
    // cleanly with neighbouring terms.
    if (p_ == 0) throw InvalidArgument("power of a p-adic number with no prime");
    const long prec = is_exact_zero() ? 64 : std::max({prec_, relative_precision(), 1L});
    return PAdic(p_, 1L, prec);
  }
  if (is_exact_zero()) return *this;
  if (is_zero()) return zero(p_, prec_ * e);
  // Unit part modulo p^rel; valuation scales linearly.
  const long rel = prec_ - val_;
  Integer u;
  mpz_powm_ui(u.get_mpz_t(), unit_.get_mpz_t(), static_cast<unsigned long>(e),
              cached_power(p_, rel).get_mpz_t());
  return from_scaled(p_, std::move(u), val_ * e, val_ * e + rel);
}

Rational PAdic::lift() const {
  if (is_zero()) return Rational(0);
  if (val_ >= 0) return Rational(unit_ * prime_power(p_, val_));
  return Rational(unit_, prime_power(p_, -val_));
}

Integer PAdic::residue(long n) const {
  if (n > prec_) throw PrecisionExhausted("residue requested beyond known precision");
  if (is_zero()) return 0;
  if (val_ < 0) throw InvalidArgument("residue of a non-integral p-adic number");
  if (val_ >= n) return 0;
  Integer x = unit_ * cached_power(p_, val_);
  mpz_mod(x.get_mpz_t(), x.get_mpz_t(), cached_power(p_, n).get_mpz_t());
  return x;
}

std::string PAdic::to_digits() const {
  std::ostringstream os;
  if (is_exact_zero()) return "0 (exact)";
  const long start = std::min(val_, 0L);
  Integer u = is_zero() ? Integer(0) : unit_;
  bool first = true;
  for (long k = start; k < prec_; ++k) {
    long digit = 0;
    if (!is_zero() && k >= val_) {
      digit = static_cast<long>(mpz_fdiv_ui(u.get_mpz_t(), static_cast<unsigned long>(p_)));
      mpz_fdiv_q_ui(u.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(p_));
    }
    if (!first) os << " + ";
    first = false;
    os << digit;
    if (k == 1) os << "*" << p_;
    else if (k != 0) os << "*" << p_ << "^" << k;
  }
  if (first) os << "0";
  os << " (mod " << p_ << "^" << prec_ << ")";
  return os.str();
}

bool operator==(const PAdic& a, const PAdic& b) { return (a - b).is_zero(); }

PAdic teichmuller(long a, long p, long m) {
  if (!is_odd_prime(p)) throw InvalidArgument("teichmuller requires an odd prime");
  if (m < 1) throw InvalidArgument("teichmuller precision must be >= 1");
  long r = a % p;
  if (r < 0) r += p;
  if (r == 0) throw InvalidArgument("teichmuller: p divides a");
  // Newton: x <- x - (x^(p-1) - 1) / ((p-1) x^(p-2)), doubling precision.
  Integer x = r;
  long known = 1;
  while (known < m) {
    known = std::min(2 * known, m);
    const Integer mod = prime_power(p, known);
    Integer fx, dfx, inv;
    mpz_powm_ui(fx.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p - 1), mod.get_mpz_t());
    fx -= 1;
    mpz_powm_ui(dfx.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p - 2), mod.get_mpz_t());
    dfx *= (p - 1);
    mpz_invert(inv.get_mpz_t(), dfx.get_mpz_t(), mod.get_mpz_t());
    x -= fx * inv;
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
  }
  return PAdic(p, x, m);
}

PAdic qpow_neg(const PAdic& q, long x) {
  if (x < 0) throw InvalidArgument("qpow_neg expects a non-negative exponent");
  if (!q.is_unit()) throw InvalidArgument("qpow_neg requires a p-adic unit");
  return q.inverse().pow(x);
}

PAdic one_unit_power(const PAdic& base, const PAdic& exponent) {
  const long p = base.prime();
  const PAdic one(p, 1L, base.precision());
  const PAdic x = base - one;
  if (!base.is_unit() || x.valuation() < 1) {
    throw InvalidArgument("one_unit_power requires a base congruent to 1 mod p");
  }
  if (exponent.is_exact_zero()) return one;
  const long vx = x.valuation();
  const long t = std::max(0L, -exponent.valuation());
  // v(C(e,k) x^k) >= k (vx - t) - (k - 1)/(p - 1) for k >= 1.
  if (vx - t < 1) {
    throw InexactPower("binomial series for a fractional power does not converge (v(base-1)=" +
                       std::to_string(vx) + ", v(exponent)=" + std::to_string(-t) + ")");
  }
  if (x.is_zero()) return one.with_precision(std::min(base.precision(), x.precision()));
  const long target = std::min(base.precision(), exponent.precision() + vx);
  PAdic sum = one;
  PAdic term = one;  // C(e,k) x^k
  for (long k = 1;; ++k) {
    const long bound = k * (vx - t) - (k - 1) / (p - 1);
    if (bound >= target) {
      return sum.with_precision(target);
    }
    term *= (exponent - PAdic(p, k - 1, exponent.precision())) * x;
    term /= PAdic(p, k, exponent.precision() + 64);
    sum += term;
  }
}

PAdic one_unit_power(const PAdic& base, const Rational& exponent) {
  if (exponent.get_den() == 1 && exponent.get_num().fits_slong_p()) {
    return base.pow(exponent.get_num().get_si());
  }
  // Give the exponent enough digits that it never limits the result.
  const long p = base.prime();
  const long extra = valuation_of(exponent.get_den(), p);
  return one_unit_power(base, PAdic(p, exponent, base.precision() + extra + 1));
}

long valuation_of_difference(const PAdic& a, const PAdic& b) {
  const PAdic d = a - b;
  return d.valuation();
}

void to_json(nlohmann::json& j, const PAdic& x) {
  j = nlohmann::json::object();
  j["p"] = x.prime();
  if (x.is_exact_zero()) {
    j["v"] = nullptr;
    j["unit"] = "0";
    j["prec"] = nullptr;
    return;
  }
  j["v"] = x.valuation();
  j["unit"] = x.unit().get_str();
  j["prec"] = x.precision();
}

void from_json(const nlohmann::json& j, PAdic& x) {
  const long p = j.at("p").get<long>();
  if (j.at("prec").is_null()) {
    x = PAdic::exact_zero(p);
    return;
  }
  const long prec = j.at("prec").get<long>();
  const long v = j.at("v").get<long>();
  const Integer unit(j.at("unit").get<std::string>());
  if (unit == 0) {
    x = PAdic::zero(p, prec);
    return;
  }
  if (v >= 0) {
    x = PAdic(p, Integer(unit * prime_power(p, v)), prec);
  } else {
    x = PAdic(p, Rational(unit, prime_power(p, -v)), prec);
  }
}

}  // namespace qeuler
